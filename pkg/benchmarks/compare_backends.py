#!/usr/bin/env python3
"""Time the compiled traversal core against the pure-Python fallback.

Builds a randomized lexicon, then measures exact membership and
distance-one search through both kernel implementations on the same
flattened automaton.

    python benchmarks/compare_backends.py [--words 20000] [--queries 2000]
"""

import argparse
import random
import time

from kanmorph import ALPHABET, build_lexicon
from kanmorph import _traverse_py
from kanmorph.lexicon import _ids

try:
    from kanmorph import _traverse
except ImportError:
    _traverse = None


def bench(label, fn, queries):
    start = time.perf_counter()
    for q in queries:
        fn(q)
    elapsed = time.perf_counter() - start
    rate = len(queries) / elapsed
    print("  %-22s %8.3fs  (%8.0f queries/s)" % (label, elapsed, rate))
    return elapsed


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--words", type=int, default=20000)
    parser.add_argument("--queries", type=int, default=2000)
    args = parser.parse_args()

    rng = random.Random(1)
    words = set()
    while len(words) < args.words:
        words.add(tuple(rng.choice(ALPHABET) for _ in range(rng.randint(2, 10))))
    lex = build_lexicon(words)
    auto = lex.forward
    kernel_args = (auto.offsets, auto.labels, auto.targets, auto.final)
    print("lexicon: %d words, %d states, %d edges"
          % (lex.word_count, auto.state_count, len(auto.labels)))

    wordlist = sorted(words)
    queries = [_ids(rng.choice(wordlist)) for _ in range(args.queries // 2)]
    queries += [_ids(tuple(rng.choice(ALPHABET) for _ in range(rng.randint(2, 10))))
                for _ in range(args.queries - len(queries))]

    print("\ncontains (%d queries):" % len(queries))
    py = bench("pure python", lambda q: _traverse_py.contains(*kernel_args, q), queries)
    if _traverse is not None:
        cy = bench("cython", lambda q: _traverse.contains(*kernel_args, q), queries)
        print("  speedup: %.1fx" % (py / cy))

    d1_queries = queries[: max(200, args.queries // 10)]
    print("\nwithin_one (%d queries):" % len(d1_queries))
    py = bench("pure python", lambda q: _traverse_py.within_one(*kernel_args, q),
               d1_queries)
    if _traverse is not None:
        cy = bench("cython", lambda q: _traverse.within_one(*kernel_args, q),
                   d1_queries)
        print("  speedup: %.1fx" % (py / cy))
    if _traverse is None:
        print("\ncompiled core not built; only the fallback was timed")


if __name__ == "__main__":
    main()
