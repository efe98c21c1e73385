# cython: boundscheck=False, wraparound=False
"""Compiled automaton traversal kernels (twin of _traverse_py)."""

import array

BACKEND = "cython"


def contains(int[:] offsets, int[:] labels, int[:] targets,
             signed char[:] final, word) -> bool:
    cdef int state = 0
    cdef int tok, e, nxt
    for tok in word:
        nxt = -1
        for e in range(offsets[state], offsets[state + 1]):
            if labels[e] == tok:
                nxt = targets[e]
                break
        if nxt < 0:
            return False
        state = nxt
    return final[state] != 0


cdef void _step(int[:] offsets, int[:] labels, int[:] targets,
                signed char[:] final, int[:] word, int n,
                int state, int pos, int errs,
                int[:] path, int depth, set out):
    cdef int e, tok, nxt
    if pos == n and final[state]:
        out.add(tuple(path[i] for i in range(depth)))
    if errs == 0 and pos < n:
        _step(offsets, labels, targets, final, word, n,
              state, pos + 1, 1, path, depth, out)
    for e in range(offsets[state], offsets[state + 1]):
        tok = labels[e]
        nxt = targets[e]
        path[depth] = tok
        if pos < n and tok == word[pos]:
            _step(offsets, labels, targets, final, word, n,
                  nxt, pos + 1, errs, path, depth + 1, out)
        if errs == 0:
            if pos < n and tok != word[pos]:
                _step(offsets, labels, targets, final, word, n,
                      nxt, pos + 1, 1, path, depth + 1, out)
            _step(offsets, labels, targets, final, word, n,
                  nxt, pos, 1, path, depth + 1, out)


def within_one(int[:] offsets, int[:] labels, int[:] targets,
               signed char[:] final, word):
    """All accepted token-id tuples at Levenshtein distance <= 1 from word."""
    cdef int n = len(word)
    word_arr = array.array("i", word)
    # longest acceptable path: every word token matched plus one insertion
    path_arr = array.array("i", [0] * (n + 2))
    out = set()
    cdef int[:] word_view
    if n > 0:
        word_view = word_arr
        _step(offsets, labels, targets, final, word_view, n,
              0, 0, 0, path_arr, 0, out)
    else:
        _step_empty(offsets, labels, targets, final, path_arr, out)
    return sorted(out)


cdef void _step_empty(int[:] offsets, int[:] labels, int[:] targets,
                      signed char[:] final, int[:] path, set out):
    # zero-length query: members of length <= 1
    cdef int e
    if final[0]:
        out.add(())
    for e in range(offsets[0], offsets[0 + 1]):
        if final[targets[e]]:
            out.add((labels[e],))
