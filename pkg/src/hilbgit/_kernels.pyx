# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-enumeration kernels.

Both kernels walk the b-subsets of the rows of ``exps`` in the order of
itertools.combinations and score each subset by the squared norm of the
sum of its rows.
"""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


def subset_norms(cnp.int64_t[:, ::1] exps, int b, long long total):
    """Squared norm of the row sum of every b-subset, combination order."""
    cdef Py_ssize_t n = exps.shape[0], k = exps.shape[1]
    out_arr = np.empty(total, dtype=np.int64)
    cdef i64[::1] out = out_arr
    if b == 0:
        out[0] = 0
        return out_arr
    idx_arr = np.arange(b, dtype=np.int64)
    sums_arr = np.zeros((b + 1, k), dtype=np.int64)
    cdef i64[::1] idx = idx_arr
    cdef i64[:, ::1] sums = sums_arr
    cdef Py_ssize_t pos, j, col
    cdef long long count = 0
    cdef i64 acc, v
    for pos in range(b):
        for col in range(k):
            sums[pos + 1, col] = sums[pos, col] + exps[idx[pos], col]
    while True:
        acc = 0
        for col in range(k):
            v = sums[b, col]
            acc += v * v
        out[count] = acc
        count += 1
        pos = b - 1
        while pos >= 0 and idx[pos] == n - b + pos:
            pos -= 1
        if pos < 0:
            break
        idx[pos] += 1
        for j in range(pos + 1, b):
            idx[j] = idx[j - 1] + 1
        for j in range(pos, b):
            for col in range(k):
                sums[j + 1, col] = sums[j, col] + exps[idx[j], col]
    return out_arr


def bnb_maximizers(cnp.int64_t[:, ::1] exps, int b, int d):
    """All b-subsets of maximal squared row-sum norm, by depth-first branch and bound.

    A partial choice with ``left`` rows still to pick can at best add
    left*d to its currently largest coordinate; branches whose bound falls
    strictly below the incumbent are cut, so ties are never lost.
    Returns (best, [index tuples]) with tuples in combination order.
    """
    cdef Py_ssize_t n = exps.shape[0], k = exps.shape[1]
    cdef i64 best = -1
    found = []
    if b == 0:
        return 0, [()]
    idx_arr = np.zeros(b, dtype=np.int64)
    sums_arr = np.zeros((b + 1, k), dtype=np.int64)
    cdef i64[::1] idx = idx_arr
    cdef i64[:, ::1] sums = sums_arr
    cdef Py_ssize_t depth = 0, col
    cdef i64 nxt = 0, acc, v, top, left, bound
    # idx[depth] is the candidate row for slot `depth`; nxt is the next row to try there
    while True:
        if depth == b:
            acc = 0
            for col in range(k):
                v = sums[b, col]
                acc += v * v
            if acc > best:
                best = acc
                found = [tuple(idx_arr.tolist())]
            elif acc == best:
                found.append(tuple(idx_arr.tolist()))
            depth -= 1
            nxt = idx[depth] + 1
            continue
        if nxt > n - (b - depth):
            if depth == 0:
                break
            depth -= 1
            nxt = idx[depth] + 1
            continue
        idx[depth] = nxt
        for col in range(k):
            sums[depth + 1, col] = sums[depth, col] + exps[nxt, col]
        left = b - depth - 1
        acc = 0
        top = 0
        for col in range(k):
            v = sums[depth + 1, col]
            acc += v * v
            if v > top:
                top = v
        bound = acc + 2 * top * left * d + (left * d) * (left * d)
        if bound < best:
            nxt += 1
            continue
        depth += 1
        nxt = idx[depth - 1] + 1
    return best, found
