"""Backend selection for the automaton traversal kernels.

Prefers the compiled extension; falls back to the pure-Python twin when
the extension is missing or KANMORPH_PURE=1 is set.  benchmarks/
compare_backends.py times the two against each other.
"""

from __future__ import annotations

import os

from . import _traverse_py

if os.environ.get("KANMORPH_PURE") == "1":
    _impl = _traverse_py
else:
    try:
        from . import _traverse as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _traverse_py

contains = _impl.contains
within_one = _impl.within_one


def active_backend() -> str:
    """"cython" when the compiled core is in use, else "python"."""
    return _impl.BACKEND
