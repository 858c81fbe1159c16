"""Time the compiled kernels against the numpy fallback.

Run with: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit
from math import comb

import numpy as np

from hilbgit import _kernels_py
from hilbgit.monomials import enumerate_monomials

try:
    from hilbgit import _kernels as compiled
except ImportError:
    compiled = None

CASES = [(2, 3, 3), (2, 4, 7), (3, 3, 5), (2, 5, 8), (3, 4, 5)]


def table(r, d):
    return np.ascontiguousarray(np.array(enumerate_monomials(r, d), dtype=np.int64))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", _kernels_py)] + ([("cython", compiled)] if compiled else [])
    print(f"{'kernel':<14}{'r':>3}{'d':>3}{'b':>3}{'subsets':>10}" + "".join(f"{n:>12}" for n, _ in backends))
    for r, d, b in CASES:
        exps = table(r, d)
        total = comb(len(exps), b)
        for kname, call in [("subset_norms", lambda m: m.subset_norms(exps, b, total)),
                            ("bnb", lambda m: m.bnb_maximizers(exps, b, d))]:
            times = [min(timeit.repeat(lambda: call(m), number=1, repeat=args.repeat)) for _, m in backends]
            print(f"{kname:<14}{r:>3}{d:>3}{b:>3}{total:>10}" + "".join(f"{t:>11.4f}s" for t in times))


if __name__ == "__main__":
    main()
