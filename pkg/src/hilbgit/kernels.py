"""Kernel selection: the compiled extension when it imports, numpy otherwise.

Set HILBGIT_PURE=1 to force the fallback.
"""

import os
from math import comb

from . import _kernels_py

BACKEND = "python"
subset_norms = _kernels_py.subset_norms
bnb_maximizers = _kernels_py.bnb_maximizers

if not os.environ.get("HILBGIT_PURE"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        BACKEND = "cython"
        subset_norms = _compiled.subset_norms
        bnb_maximizers = _compiled.bnb_maximizers


def unrank_combination(n: int, b: int, index: int) -> tuple[int, ...]:
    """The index-th (0-based) b-subset of range(n) in itertools.combinations order."""
    out = []
    start = 0
    for slot in range(b):
        for x in range(start, n):
            block = comb(n - x - 1, b - slot - 1)
            if index < block:
                out.append(x)
                start = x + 1
                break
            index -= block
    return tuple(out)
