from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given, strategies as st

from hilbgit.hilbert import (
    NotHilbertPolynomial,
    UnsupportedDimension,
    delta_of,
    derived_scalars,
    dp_conditions,
    dup_conditions,
    energy,
    eval_P,
    eval_Q,
    from_binomial_basis,
    goodsit_poly,
    is_integer_valued,
    l_e_of,
    l_e_prime,
    level,
    macaulay_decompose,
    macaulay_q,
    make_spec,
    parse_spec,
    poly_eval,
    sqrt_gt,
    sqrt_lt,
    threshold_DP,
    threshold_Dup,
    to_binomial_basis,
)
from hilbgit.ideals import hilbert_function_quotient, lex_ideal
from hilbgit.monomials import binom, lex_segment
from hilbgit.state import state_vector

goodsit = st.tuples(st.integers(2, 4), st.integers(0, 3), st.integers(0, 5)).filter(lambda t: t[1] + t[2] > 0)


def test_parse_examples():
    s = parse_spec("const:3", 2)
    assert (eval_P(s, 7), s.gamma, s.p_const, s.gotzmann) == (3, 0, 3, 3)
    s = parse_spec("goodsit:1,0", 2)
    assert [eval_P(s, d) for d in range(4)] == [d + 1 for d in range(4)]
    assert (s.gamma, s.p_const, s.gotzmann, s.b_sequence) == (1, 0, 1, (1,))
    s = parse_spec("goodsit:2,1", 3)
    assert all(eval_P(s, d) == (d + 1) ** 2 + 1 for d in range(10))
    assert s.gotzmann == 3


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_spec("cubic:1", 2)
    with pytest.raises(ValueError):
        parse_spec("goodsit:1", 2)
    with pytest.raises(NotHilbertPolynomial):
        parse_spec("binom:1/2", 2)  # not integer valued
    with pytest.raises(NotHilbertPolynomial):
        parse_spec("binom:0,0,1", 2)  # degree >= r
    with pytest.raises(NotHilbertPolynomial):
        parse_spec("const:-1", 2)


def test_eval_examples():
    s = parse_spec("const:3", 2)
    assert (eval_P(s, 3), eval_Q(s, 3)) == (3, 7)
    s = parse_spec("goodsit:1,1", 2)
    assert (eval_P(s, 4), eval_Q(s, 4)) == (6, 9)
    zero = make_spec(2, ())
    assert eval_Q(zero, 5) == binom(7, 2)
    assert zero.gotzmann == 0 and zero.b_sequence == ()


def test_macaulay_examples():
    s = parse_spec("const:3", 2)
    assert s.b_sequence == (0, 0, 0)
    assert s.a_sequence == (1, 3)
    # Q(3) = C(4,2) + C(1,1)
    assert macaulay_q(2, s.a_sequence, 3) == 7


@given(goodsit)
def test_goodsit_gotzmann_number(t):
    r, g, p = t
    s = make_spec(r, goodsit_poly(r, g, p))
    assert s.b_sequence == (r - 1,) * g + (0,) * p
    assert s.gotzmann == g + p == s.a_sequence[-1]
    assert (s.gamma, s.p_const) == (g, p)


@given(goodsit)
def test_macaulay_representation_reproduces_Q(t):
    r, g, p = t
    s = make_spec(r, goodsit_poly(r, g, p))
    a = s.a_sequence
    assert a[0] >= 1 and len(a) - 1 < r
    assert list(a) == sorted(a)
    for d in range(s.gotzmann, s.gotzmann + 6):
        assert macaulay_q(r, a, d) == eval_Q(s, d)


@given(goodsit)
def test_lex_ideal_has_hilbert_polynomial(t):
    # oracle: count quotient monomials of the lex ideal directly
    r, g, p = t
    s = make_spec(r, goodsit_poly(r, g, p))
    I = lex_ideal(s)
    for d in range(s.gotzmann, s.gotzmann + 3):
        assert hilbert_function_quotient(I, d) == eval_P(s, d)


def test_decompose_twisted_cubic():
    # 3d + 1 in P^3
    s = make_spec(3, (Fraction(1), Fraction(3)))
    assert s.b_sequence == (1, 1, 1, 0)
    assert s.gotzmann == 4
    assert not s.is_goodsit
    bs, a, g = macaulay_decompose(s)
    assert g == a[-1] == 4


def test_binomial_basis_roundtrip():
    coeffs = (Fraction(2), Fraction(-1), Fraction(3))
    poly = from_binomial_basis(coeffs)
    assert to_binomial_basis(poly) == coeffs
    assert is_integer_valued(poly)
    assert not is_integer_valued((Fraction(0), Fraction(1, 2)))
    # C(d+1,1) = d + 1
    assert poly_eval(from_binomial_basis((0, 1)), 5) == 6


def test_level_energy_definitions():
    assert level(0, 2) == -1
    assert (level(1, 2), energy(1, 2)) == (0, 0)
    assert (level(3, 2), energy(3, 2)) == (1, 2)
    assert (level(6, 2), energy(6, 2)) == (2, 8)


@pytest.mark.parametrize("c", range(1, 11))
def test_energy_is_lex_pairing(c):
    # e = sum over the first c monomials of (d - x0 exponent), read off the state of L_c
    r, d = 2, 12
    s = make_spec(r, (Fraction(c),))
    l, e = l_e_of(s, d)
    c0 = state_vector(lex_segment(r, d, c)).coords[0]
    assert d * c - c0 == e
    assert binom(r + l - 1, r) < c <= binom(r + l, r)
    assert 0 <= e <= l * c


def test_l_e_examples():
    assert l_e_of(parse_spec("const:3", 2), 9) == (1, 2)
    assert l_e_of(parse_spec("const:1", 3), 9) == (0, 0)
    # definition and lex-state oracle both give 4 here
    assert l_e_of(parse_spec("const:4", 2), 9) == (2, 4)


def test_gamma_and_delta():
    assert parse_spec("const:5", 2).gamma == 0
    assert parse_spec("goodsit:2,1", 3).gamma == 2
    line = parse_spec("const:4", 1)
    assert line.gamma == 4
    for d in range(4, 12):
        assert delta_of(line, d) == d - 4
    s = parse_spec("goodsit:2,3", 3)
    for d in range(s.gotzmann, s.gotzmann + 8):
        delta = delta_of(s, d)
        assert delta == d - 2
        assert binom(3 + delta - 1, 3) < eval_Q(s, d) <= binom(3 + delta, 3)


def test_derived_scalars_example():
    s = derived_scalars(parse_spec("goodsit:1,1", 2), 4)
    assert (s.delta, s.alpha, s.epsilon, s.p_of_d) == (3, 5, 20, 1)
    assert (s.l, s.e, s.rho) == (2, 8, 0)
    assert (s.l_prime, s.e_prime) == (0, 0)
    assert (s.center, s.discriminant) == (12, 144)


def test_constant_has_no_alpha_epsilon():
    s = derived_scalars(parse_spec("const:4", 3), 9)
    assert (s.alpha, s.epsilon, s.p_of_d) == (0, 0, 4)


def test_prime_scalars_need_two_variables():
    with pytest.raises(UnsupportedDimension):
        l_e_prime(parse_spec("const:2", 1), 5)


@given(st.integers(-50, 50), st.integers(-200, 2000))
def test_sqrt_comparisons(x, D):
    if D < 0:
        return
    root = isqrt(D)
    exact = root * root == D
    # sqrt(D) > x  and  sqrt(D) < x, decided against the integer square root
    assert sqrt_gt(x, D) == (root > x if exact else root >= x)
    assert sqrt_lt(x, D) == (root < x)


def test_sqrt_rational():
    assert sqrt_gt(Fraction(3, 2), Fraction(9, 4)) is False
    assert sqrt_lt(Fraction(3, 2), Fraction(9, 4)) is False
    assert sqrt_gt(Fraction(3, 2), Fraction(10, 4)) is True
    assert sqrt_lt(Fraction(3, 2), Fraction(8, 4)) is True


def test_threshold_DP_is_certified_window():
    s = parse_spec("const:3", 2)
    t = threshold_DP(s, 200)
    assert t == 9
    for d in range(t, 201):
        assert all(dp_conditions(s, d).values())
        l, e = l_e_of(s, d)
        assert Fraction(e, d * 3) <= Fraction(l, d) < Fraction(1, 8)
    assert not all(dp_conditions(s, t - 1).values())


def test_threshold_Dup_examples():
    assert threshold_Dup(parse_spec("goodsit:2,2", 2), 200) == 4
    assert threshold_Dup(parse_spec("goodsit:1,2", 2), 200) == 3
    assert threshold_Dup(parse_spec("goodsit:3,3", 2), 200) == 9


@pytest.mark.parametrize("g", [1, 2, 3])
@pytest.mark.parametrize("p", [0, 1])
def test_threshold_Dup_absent_for_small_p(g, p):
    # p <= 1 puts the residual at level 0, so the smaller root is exactly 0
    s = parse_spec(f"goodsit:{g},{p}", 2)
    assert threshold_Dup(s, 200) is None
    for d in range(s.gotzmann, s.gotzmann + 20):
        assert not dup_conditions(s, d)["lowerRootPositive"]


def test_threshold_window_rechecked_independently():
    s = parse_spec("goodsit:2,3", 2)
    t = threshold_Dup(s, 120)
    assert t is not None
    for d in range(t, 121):
        sc = derived_scalars(s, d)
        C, D = sc.center, sc.discriminant
        pd = sc.p_of_d * sc.delta
        # compare (C -/+ sqrt D)/2 with 0, 1, p*delta via floats as a sanity cross-check
        lo, hi = (float(C) - float(D) ** 0.5) / 2, (float(C) + float(D) ** 0.5) / 2
        assert D > 0 and 0 < lo < 1 < pd < hi
