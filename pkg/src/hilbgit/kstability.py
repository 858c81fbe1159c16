"""Donaldson-Futaki data for diagonal test configurations of monomial ideals.

F(d) = <c of the quotient monomials of degree d, lambda> / (d P(d)).  The
pairing and P are polynomial in d for large d; both are interpolated
exactly and F is expanded at infinity as A0 + A1/d + ...
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .hilbert import HilbertPolynomialSpec, poly_degree, poly_eval, poly_mul, poly_sub, _trim
from .ideals import MonomialIdeal
from .monomials import enumerate_monomials
from .state import OnePS


class NotEventuallyPolynomial(ValueError):
    pass


def _as_one_ps(lam) -> OnePS:
    return lam if isinstance(lam, OnePS) else OnePS(tuple(int(w) for w in lam))


def quotient_data(I: MonomialIdeal, d: int) -> tuple[tuple[int, ...], int]:
    """State of the degree-d quotient monomials and their count."""
    c = [0] * (I.r + 1)
    count = 0
    for m in enumerate_monomials(I.r, d):
        if m not in I:
            count += 1
            for i, e in enumerate(m):
                c[i] += e
    return tuple(c), count


def futaki_value(I: MonomialIdeal, lam, d: int) -> Fraction:
    lam = _as_one_ps(lam)
    if d < I.max_degree:
        raise ValueError(f"d = {d} below the largest generator degree {I.max_degree}")
    c, P = quotient_data(I, d)
    if P == 0:
        raise ValueError("P(d) = 0")
    return Fraction(lam.pair(c), d * P)


def interpolate(points: Sequence[tuple[int, int]]):
    """Exact Lagrange interpolation, power-basis coefficients."""
    out = ()
    for i, (xi, yi) in enumerate(points):
        basis = (Fraction(1),)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = poly_mul(basis, (Fraction(-xj), Fraction(1)))
                denom *= xi - xj
        out = tuple(
            (out[k] if k < len(out) else 0) + (basis[k] * yi / denom if k < len(basis) else 0)
            for k in range(max(len(out), len(basis)))
        )
    return _trim(out)


def series_at_infinity(num, den, terms: int) -> list[Fraction]:
    """First coefficients A0, A1, ... of num/den = sum_i A_i d^-i (deg num <= deg den)."""
    q = poly_degree(den)
    if poly_degree(num) > q:
        raise ValueError("numerator grows faster than the denominator")
    top = [num[q - k] if 0 <= q - k < len(num) else Fraction(0) for k in range(terms)]
    dtop = [den[q - k] if q - k >= 0 else Fraction(0) for k in range(terms)]
    coeffs: list[Fraction] = []
    for k in range(terms):
        acc = top[k] - sum(coeffs[j] * dtop[k - j] for j in range(k))
        coeffs.append(acc / dtop[0])
    return coeffs


@dataclass(frozen=True)
class FutakiExpansion:
    lam: OnePS
    A0: Fraction
    A1: Fraction
    numerator: tuple
    denominator: tuple
    sample_window: tuple[int, ...]


def futaki_expansion(I: MonomialIdeal, lam, d_min: Optional[int] = None) -> FutakiExpansion:
    lam = _as_one_ps(lam)
    r = I.r
    if d_min is None:
        d_min = I.max_degree + r + 2
    samples = list(range(d_min, d_min + r + 3))
    held_out = [d_min + r + 3, d_min + r + 4]
    data = {}
    for d in samples + held_out:
        c, P = quotient_data(I, d)
        data[d] = (lam.pair(c), P)
    pairing = interpolate([(d, data[d][0]) for d in samples[: r + 2]])
    hilb = interpolate([(d, data[d][1]) for d in samples[: r + 2]])
    for d in samples[r + 2:] + held_out:
        if poly_eval(pairing, d) != data[d][0] or poly_eval(hilb, d) != data[d][1]:
            raise NotEventuallyPolynomial(f"pairing not eventually polynomial from d_min = {d_min}")
    if not hilb:
        raise ValueError("the quotient is eventually zero")
    denominator = poly_mul((Fraction(0), Fraction(1)), hilb)
    A0, A1 = series_at_infinity(pairing, denominator, 2)
    # d^2 (F - A0 - A1/d) has numerator  d*N - P*(A0 d^2 + A1 d); it is bounded
    # exactly when that numerator has degree <= deg P.
    rem = poly_sub(poly_mul((Fraction(0), Fraction(1)), pairing), poly_mul(hilb, (Fraction(0), A1, A0)))
    if poly_degree(rem) > poly_degree(hilb):
        raise AssertionError("A0 + A1/d does not approximate F to o(1/d)")
    return FutakiExpansion(lam, A0, A1, pairing, denominator, tuple(samples))


def standard_lambda(r: int) -> OnePS:
    """(r, -1, ..., -1)."""
    return OnePS((r,) + (-1,) * r)


@dataclass(frozen=True)
class KInstabilityReport:
    plus: FutakiExpansion
    minus: FutakiExpansion

    @property
    def destabilized(self) -> bool:
        return self.plus.A1 > 0 or self.minus.A1 > 0


def k_instability_report(I: MonomialIdeal, spec: HilbertPolynomialSpec) -> KInstabilityReport:
    lam = standard_lambda(spec.r)
    d_min = max(spec.gotzmann, I.max_degree) + spec.r + 2
    return KInstabilityReport(futaki_expansion(I, lam, d_min), futaki_expansion(I, -lam, d_min))
