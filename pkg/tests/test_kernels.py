"""The compiled and pure-Python traversal kernels must agree exactly."""

import random

import pytest

from kanmorph import ALPHABET, build_lexicon
from kanmorph import _traverse_py
from kanmorph.kernels import active_backend
from kanmorph.lexicon import _ids

try:
    from kanmorph import _traverse
except ImportError:
    _traverse = None


def test_a_backend_is_active():
    assert active_backend() in ("cython", "python")


@pytest.mark.skipif(_traverse is None, reason="compiled core not built")
def test_backends_agree():
    rng = random.Random(13)
    words = set()
    while len(words) < 400:
        words.add(tuple(rng.choice(ALPHABET) for _ in range(rng.randint(1, 8))))
    lex = build_lexicon(words)
    auto = lex.forward
    args = (auto.offsets, auto.labels, auto.targets, auto.final)
    queries = [rng.choice(sorted(words)) for _ in range(100)]
    queries += [tuple(rng.choice(ALPHABET) for _ in range(rng.randint(0, 9)))
                for _ in range(200)]
    for q in queries:
        ids = _ids(q)
        assert _traverse.contains(*args, ids) == _traverse_py.contains(*args, ids)
        assert _traverse.within_one(*args, ids) == _traverse_py.within_one(*args, ids)


@pytest.mark.skipif(_traverse is None, reason="compiled core not built")
def test_backend_env_override(tmp_path):
    import subprocess
    import sys
    code = ("from kanmorph.kernels import active_backend; "
            "print(active_backend())")
    forced = subprocess.run([sys.executable, "-c", code],
                            env={"KANMORPH_PURE": "1", "PATH": "/usr/bin:/bin"},
                            capture_output=True, text=True)
    assert forced.stdout.strip() == "python"
