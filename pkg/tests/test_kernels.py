from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hilbgit import _kernels_py, kernels
from hilbgit.monomials import enumerate_monomials

compiled = pytest.importorskip("hilbgit._kernels")
BACKENDS = [_kernels_py, compiled]


def table(r, d):
    return np.ascontiguousarray(np.array(enumerate_monomials(r, d), dtype=np.int64))


def direct_norms(exps, b):
    return [int((exps[list(c)].sum(axis=0) ** 2).sum()) for c in combinations(range(len(exps)), b)]


@pytest.mark.parametrize("backend", BACKENDS, ids=["python", "cython"])
@pytest.mark.parametrize("r,d", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_subset_norms_order_and_values(backend, r, d):
    exps = table(r, d)
    n = len(exps)
    for b in range(n + 1):
        got = backend.subset_norms(exps, b, comb(n, b))
        assert got.tolist() == direct_norms(exps, b)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(1, 5), (2, 3), (2, 4), (3, 2)]), st.data())
def test_backends_agree(rd, data):
    r, d = rd
    exps = table(r, d)
    n = len(exps)
    b = data.draw(st.integers(0, min(n, 6)))
    a = _kernels_py.subset_norms(exps, b, comb(n, b))
    c = compiled.subset_norms(exps, b, comb(n, b))
    assert np.array_equal(a, c)
    best_a, found_a = _kernels_py.bnb_maximizers(exps, b, d)
    best_c, found_c = compiled.bnb_maximizers(exps, b, d)
    assert best_a == best_c
    assert sorted(found_a) == sorted(found_c)
    if b:
        assert best_a == a.max()
        assert sorted(found_a) == [kernels.unrank_combination(n, b, int(i)) for i in np.flatnonzero(a == a.max())]


@pytest.mark.parametrize("n,b", [(5, 0), (5, 2), (7, 3), (10, 10)])
def test_unrank_matches_itertools(n, b):
    for i, c in enumerate(combinations(range(n), b)):
        assert kernels.unrank_combination(n, b, i) == c


def test_backend_selection():
    assert kernels.BACKEND in ("cython", "python")
    if kernels.BACKEND == "cython":
        assert kernels.subset_norms is compiled.subset_norms
