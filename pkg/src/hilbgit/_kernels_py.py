"""Pure-Python/numpy versions of the subset kernels (same contracts as _kernels.pyx)."""

from itertools import combinations, islice

import numpy as np

CHUNK = 1 << 16


def subset_norms(exps, b, total):
    exps = np.asarray(exps, dtype=np.int64)
    n = exps.shape[0]
    out = np.empty(total, dtype=np.int64)
    if b == 0:
        out[0] = 0
        return out
    combos = combinations(range(n), b)
    start = 0
    while start < total:
        block = np.fromiter(
            (i for c in islice(combos, CHUNK) for i in c), dtype=np.int64
        ).reshape(-1, b)
        sums = exps[block].sum(axis=1)
        out[start:start + len(block)] = (sums * sums).sum(axis=1)
        start += len(block)
    return out


def bnb_maximizers(exps, b, d):
    rows = [tuple(int(x) for x in row) for row in np.asarray(exps)]
    n = len(rows)
    k = len(rows[0]) if rows else 0
    if b == 0:
        return 0, [()]
    best = -1
    found = []
    idx = [0] * b

    def descend(depth, start, sums):
        nonlocal best, found
        left = b - depth - 1
        for row in range(start, n - left):
            idx[depth] = row
            part = [s + x for s, x in zip(sums, rows[row])]
            acc = sum(v * v for v in part)
            if left == 0:
                if acc > best:
                    best, found = acc, [tuple(idx)]
                elif acc == best:
                    found.append(tuple(idx))
                continue
            top = max(part)
            if acc + 2 * top * left * d + (left * d) ** 2 < best:
                continue
            descend(depth + 1, row + 1, part)

    descend(0, 0, [0] * k)
    return best, found
