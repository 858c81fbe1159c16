from fractions import Fraction

import pytest

from hilbgit.hilbert import parse_spec, poly_eval
from hilbgit.ideals import MonomialIdeal, ideal_from_subspace, saturate
from hilbgit.kstability import (
    NotEventuallyPolynomial,
    futaki_expansion,
    futaki_value,
    interpolate,
    k_instability_report,
    quotient_data,
    series_at_infinity,
    standard_lambda,
)
from hilbgit.monomials import enumerate_monomials
from hilbgit.state import OnePS
from hilbgit.worst import construct


def worst_ideal(text, r):
    spec = parse_spec(text, r)
    return saturate(ideal_from_subspace(construct(spec, spec.gotzmann).maximizers[0])), spec


def test_quotient_data_counts_directly():
    I = MonomialIdeal(2, ((0, 2, 0), (0, 1, 1), (0, 0, 2)))
    for d in range(2, 7):
        outside = [m for m in enumerate_monomials(2, d) if m[1] + m[2] <= 1]
        c = tuple(sum(m[i] for m in outside) for i in range(3))
        assert quotient_data(I, d) == (c, 3)


def test_interpolation_and_series():
    pts = [(x, 3 * x * x - 2 * x + 5) for x in range(4, 8)]
    assert interpolate(pts) == (5, -2, 3)
    # (2d^2 + 3d) / (d^2 + d) = 2 + 1/d - 1/d^2 + ...
    assert series_at_infinity((0, 3, 2), (0, 1, 1), 3) == [2, 1, -1]


def test_fat_point_expansion():
    # (x1, x2)^2: a triple point at [1:0:0]; F = -2 + 2/d for lambda = -(2,-1,-1)
    I = MonomialIdeal(2, ((0, 2, 0), (0, 1, 1), (0, 0, 2)))
    f = futaki_expansion(I, OnePS((-2, 1, 1)))
    assert (f.A0, f.A1) == (-2, 2)
    for d in range(4, 12):
        assert futaki_value(I, (-2, 1, 1), d) == Fraction(-2) + Fraction(2, d)


def test_line_point_ideal():
    # (x0, x1)^2: the same triple point at [0:0:1]; F = 1 - 1/d for the same lambda
    I = MonomialIdeal(2, ((2, 0, 0), (1, 1, 0), (0, 2, 0)))
    f = futaki_expansion(I, OnePS((-2, 1, 1)))
    assert (f.A0, f.A1) == (1, -1)
    for d in range(4, 12):
        assert futaki_value(I, (-2, 1, 1), d) == 1 - Fraction(1, d)


def test_expansion_matches_values():
    I, spec = worst_ideal("goodsit:2,1", 2)
    lam = standard_lambda(2)
    f = futaki_expansion(I, lam)
    for d in list(f.sample_window) + [40, 41]:
        assert futaki_value(I, lam, d) == poly_eval(f.numerator, d) / poly_eval(f.denominator, d)


def test_examples_from_constructions():
    I, spec = worst_ideal("const:3", 2)
    rep = k_instability_report(I, spec)
    assert rep.minus.A1 == 2 and rep.destabilized
    I, spec = worst_ideal("goodsit:3,0", 2)
    assert k_instability_report(I, spec).plus.A1 == 3
    I, spec = worst_ideal("goodsit:1,0", 2)
    rep = k_instability_report(I, spec)
    assert rep.plus.A1 == 0 and rep.minus.A1 == 0 and not rep.destabilized


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("g", [1, 2, 3])
def test_leading_term_is_minus_one(r, g):
    I, spec = worst_ideal(f"goodsit:{g},1", r)
    assert futaki_expansion(I, standard_lambda(r)).A0 == -1


def test_scaling_and_determinism():
    I, _ = worst_ideal("goodsit:2,1", 2)
    lam = standard_lambda(2)
    f1, f2 = futaki_expansion(I, lam, 9), futaki_expansion(I, lam.scaled(2), 9)
    assert (f2.A0, f2.A1) == (2 * f1.A0, 2 * f1.A1)
    assert (f1.A1 > 0) == (f2.A1 > 0)
    assert futaki_expansion(I, lam, 9) == f1


def test_guards():
    I = MonomialIdeal(2, ((0, 2, 0), (0, 1, 1), (0, 0, 2)))
    with pytest.raises(ValueError):
        futaki_value(I, (-2, 1, 1), 1)
    with pytest.raises(ValueError):
        futaki_value(I, (1, 1, 1), 3)
    # the quotient of the maximal ideal power is eventually zero
    with pytest.raises(ValueError):
        futaki_expansion(MonomialIdeal(2, tuple(enumerate_monomials(2, 2))), (2, -1, -1))


def test_early_window_is_rejected():
    # the quotient drops from 1 to 0 at degree 5, inside the held-out degrees 4, 5
    I = MonomialIdeal(1, ((5, 0), (0, 1)))
    with pytest.raises(NotEventuallyPolynomial):
        futaki_expansion(I, (1, -1), d_min=0)
