from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hilbgit.hilbert import eval_Q, goodsit_poly, make_spec, parse_spec
from hilbgit.ideals import (
    MonomialIdeal,
    NotBorelFixed,
    borel_permutation,
    degree_slice,
    hilbert_function_quotient,
    ideal_from_subspace,
    is_borel_fixed,
    lex_ideal,
    murai_check,
    persistence_check,
    regularity_borel,
    saturate,
)
from hilbgit.monomials import MonomialSubspace, divides, enumerate_monomials, lex_cosegment, lex_segment, mul


def ideal(r, *gens):
    return MonomialIdeal(r, tuple(gens))


def member_of_saturation(I, m):
    # oracle: m is in sat(I) iff m times every monomial of a large degree lies in I
    k = (I.r + 1) * max(I.max_degree, 1)
    return all(any(divides(g, mul(m, n)) for g in I.generators) for n in enumerate_monomials(I.r, k))


@st.composite
def small_ideals(draw):
    r = draw(st.integers(1, 2))
    gens = draw(st.lists(st.tuples(*[st.integers(0, 3)] * (r + 1)), min_size=1, max_size=4))
    return MonomialIdeal(r, tuple(g for g in gens if sum(g) > 0) or ((1,) + (0,) * r,))


def test_minimal_generators():
    I = ideal(2, (1, 0, 0), (2, 1, 0), (0, 1, 1))
    assert I.generators == ((1, 0, 0), (0, 1, 1))


def test_slices():
    I = ideal(2, (3, 0, 0), (2, 1, 0), (2, 0, 1))
    # x0^2 times all of M_2; the remaining 15 - 6 monomials form the quotient
    assert len(degree_slice(I, 4)) == 6
    assert hilbert_function_quotient(I, 4) == 9
    assert len(degree_slice(I, 2)) == 0
    A = lex_cosegment(2, 3, 3)
    assert ideal_from_subspace(A).generators == A.members


def test_quotient_hilbert_function():
    J = ideal_from_subspace(lex_cosegment(2, 3, 3))
    assert [hilbert_function_quotient(J, t) for t in (3, 4, 5)] == [3, 3, 3]
    line = ideal(2, (1, 0, 0))
    assert all(hilbert_function_quotient(line, t) == t + 1 for t in range(8))
    assert hilbert_function_quotient(ideal(2, (2, 0, 0), (1, 1, 0), (0, 2, 0)), 7) == 3


def test_saturation_examples():
    W = MonomialSubspace(2, 3, tuple(m for m in enumerate_monomials(2, 3) if m[2] <= 1))
    sat = saturate(ideal_from_subspace(W))
    assert sat.generators == ((2, 0, 0), (1, 1, 0), (0, 2, 0))
    for t in (3, 4, 5):
        assert hilbert_function_quotient(sat, t) == hilbert_function_quotient(ideal_from_subspace(W), t)
    # a line union an embedded point: <x0 x1, x0 x2> is already saturated
    I = ideal(2, (1, 1, 0), (1, 0, 1))
    assert saturate(I) == I
    # an irrelevant factor is removed
    assert saturate(ideal(2, (1, 1, 0), (1, 0, 1), (2, 0, 0))) == ideal(2, (1, 0, 0))


@settings(max_examples=60, deadline=None)
@given(small_ideals())
def test_saturation_against_membership_oracle(I):
    sat = saturate(I)
    assert saturate(sat) == sat
    top = max(sat.max_degree, I.max_degree) + 1
    for t in range(top + 1):
        for m in enumerate_monomials(I.r, t):
            assert (m in sat) == member_of_saturation(I, m)
        assert hilbert_function_quotient(sat, t) <= hilbert_function_quotient(I, t)


def test_borel_examples():
    assert is_borel_fixed(ideal(2, (3, 0, 0), (2, 1, 0), (2, 0, 1)))
    A = ideal_from_subspace(lex_cosegment(2, 3, 3))
    assert not is_borel_fixed(A)
    W = MonomialSubspace(2, 3, tuple(m for m in enumerate_monomials(2, 3) if m[2] <= 1))
    assert is_borel_fixed(ideal_from_subspace(W))
    perm = borel_permutation(A)
    assert perm is not None and is_borel_fixed(A.permuted(perm))
    assert borel_permutation(ideal(2, (1, 1, 0), (1, 0, 1))) is None


def test_regularity_examples():
    assert regularity_borel(ideal(2, (1, 0, 0), (0, 3, 0))) == 3
    assert regularity_borel(ideal(2, (2, 0, 0), (1, 1, 0), (0, 2, 0))) == 2
    assert regularity_borel(ideal(2, (1, 0, 0))) == 1
    with pytest.raises(NotBorelFixed):
        regularity_borel(ideal(2, (0, 2, 0), (0, 1, 1), (0, 0, 2)))
    assert regularity_borel(ideal(2, (0, 2, 0), (0, 1, 1), (0, 0, 2)), permute_ok=True) == 2


def test_lex_ideal_examples():
    assert lex_ideal(parse_spec("const:3", 2)) == ideal(2, (1, 0, 0), (0, 3, 0))
    assert lex_ideal(parse_spec("goodsit:1,0", 2)) == ideal(2, (1, 0, 0))
    assert lex_ideal(parse_spec("goodsit:1,2", 2)) == ideal(2, (2, 0, 0), (1, 2, 0))


@pytest.mark.parametrize("r,g,p", [(2, 0, 3), (2, 1, 2), (3, 2, 1), (3, 0, 5), (4, 3, 2), (3, 1, 0)])
def test_lex_ideal_slices_are_lex_segments(r, g, p):
    spec = make_spec(r, goodsit_poly(r, g, p)) if g else parse_spec(f"const:{p}", r)
    I = lex_ideal(spec)
    assert regularity_borel(I) == spec.gotzmann
    for d in range(spec.gotzmann, spec.gotzmann + 3):
        assert degree_slice(I, d) == lex_segment(r, d, eval_Q(spec, d))


def test_persistence_examples():
    spec = parse_spec("const:3", 2)
    assert persistence_check(lex_cosegment(2, 3, 3), spec)
    bad = MonomialSubspace(2, 3, ((3, 0, 0), (2, 1, 0), (0, 2, 1))).complement()
    assert not persistence_check(bad, spec)
    for text, r in [("const:3", 2), ("goodsit:2,1", 3), ("goodsit:1,2", 2)]:
        s = parse_spec(text, r)
        for d in range(s.gotzmann, s.gotzmann + 3):
            assert persistence_check(lex_segment(r, d, eval_Q(s, d)), s)
    with pytest.raises(ValueError):
        persistence_check(lex_segment(2, 3, 6), spec)


def test_persistence_implies_hilbert_polynomial():
    spec = parse_spec("const:3", 2)
    for combo in combinations(enumerate_monomials(2, 3), 7):
        W = MonomialSubspace(2, 3, combo)
        if persistence_check(W, spec):
            J = ideal_from_subspace(W)
            assert all(hilbert_function_quotient(J, t) == 3 for t in range(3, 9))


def test_murai_examples():
    spec = parse_spec("const:3", 2)
    res = murai_check(lex_cosegment(2, 3, 3), spec)
    assert res.holds and res.divisor == (0, 0, 0)
    assert all(i == 0 for _, i in res.indices)
    bad = MonomialSubspace(2, 3, ((3, 0, 0), (2, 1, 0), (0, 2, 1))).complement()
    res = murai_check(bad, spec)
    assert not res
    assert dict(res.indices)[(0, 2, 1)] is None
    hyper = parse_spec("goodsit:1,0", 2)
    for d in (2, 3, 4):
        W = MonomialSubspace(2, d, tuple(m for m in enumerate_monomials(2, d) if m[0] >= 1))
        res = murai_check(W, hyper)
        assert res.holds and res.divisor == (1, 0, 0)


@pytest.mark.slow
@pytest.mark.parametrize("text", ["const:3", "goodsit:1,0", "const:2"])
def test_murai_agrees_with_persistence_at_degree_4(text):
    spec = parse_spec(text, 2)
    b = eval_Q(spec, 4)
    for combo in combinations(enumerate_monomials(2, 4), b):
        W = MonomialSubspace(2, 4, combo)
        assert bool(murai_check(W, spec)) == persistence_check(W, spec)
