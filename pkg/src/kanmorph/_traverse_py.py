"""Pure-Python automaton traversal kernels.

Mirrors kanmorph._traverse (the Cython build); kanmorph.kernels picks one
at import time.  The automaton is a flattened minimal acyclic DFA:

* offsets[s] .. offsets[s+1]  edge range of state s (root is state 0)
* labels[e], targets[e]       token id and target state of edge e
* final[s]                    1 if state s accepts
"""

from __future__ import annotations

BACKEND = "python"


def contains(offsets, labels, targets, final, word) -> bool:
    state = 0
    for tok in word:
        lo = offsets[state]
        hi = offsets[state + 1]
        nxt = -1
        for e in range(lo, hi):
            if labels[e] == tok:
                nxt = targets[e]
                break
        if nxt < 0:
            return False
        state = nxt
    return bool(final[state])


def within_one(offsets, labels, targets, final, word):
    """All accepted token-id tuples at Levenshtein distance <= 1 from word.

    Distance is counted in whole tokens; one insertion, deletion or
    substitution is allowed.
    """
    n = len(word)
    out = set()
    path = []

    def step(state, pos, errs):
        if pos == n and final[state]:
            out.add(tuple(path))
        if errs == 0 and pos < n:
            # deletion: skip word[pos], emit nothing
            step(state, pos + 1, 1)
        for e in range(offsets[state], offsets[state + 1]):
            tok = labels[e]
            nxt = targets[e]
            path.append(tok)
            if pos < n and tok == word[pos]:
                step(nxt, pos + 1, errs)
            if errs == 0:
                if pos < n and tok != word[pos]:
                    step(nxt, pos + 1, 1)  # substitution
                step(nxt, pos, 1)  # insertion
            path.pop()

    step(0, 0, 0)
    return sorted(out)
