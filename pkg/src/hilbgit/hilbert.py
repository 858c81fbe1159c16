"""Hilbert polynomials, their Gotzmann/Macaulay data and derived scalars.

A polynomial is carried in the power basis as a tuple of ``Fraction``
coefficients (constant term first).  The binomial basis C(d+i, i) is used
for parsing, for the integer-valuedness test and for output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional

from .monomials import binom

Poly = tuple  # tuple[Fraction, ...], power basis

MAX_PEEL_STEPS = 100_000


class NotHilbertPolynomial(ValueError):
    pass


class UnsupportedDimension(ValueError):
    pass


# -- power-basis helpers ---------------------------------------------------

def _trim(coeffs) -> Poly:
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_eval(poly: Poly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def poly_degree(poly: Poly) -> int:
    return len(poly) - 1  # -1 for the zero polynomial


def poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, tuple(-c for c in b))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def binomial_poly(shift: int, k: int) -> Poly:
    """C(d + shift, k) as a polynomial in d: (d+shift)(d+shift-1).../k!."""
    out: Poly = (Fraction(1),)
    for j in range(k):
        out = poly_mul(out, (Fraction(shift - j), Fraction(1)))
    return tuple(c / factorial(k) for c in out)


def from_binomial_basis(coeffs) -> Poly:
    """sum_i c_i C(d+i, i)."""
    out: Poly = ()
    for i, c in enumerate(coeffs):
        out = poly_add(out, tuple(Fraction(c) * x for x in binomial_poly(i, i)))
    return out


def to_binomial_basis(poly: Poly) -> tuple[Fraction, ...]:
    """Coefficients c_i with poly(d) = sum_i c_i C(d+i, i).

    C(d+i, i) vanishes at d = -1, ..., -i, so evaluating at d = -1, -2, ...
    gives a triangular system.
    """
    n = len(poly)
    coeffs: list[Fraction] = []
    for k in range(1, n + 1):
        value = poly_eval(poly, -k)
        for i, c in enumerate(coeffs):
            value -= c * poly_eval(binomial_poly(i, i), -k)
        # diagonal entry C(k-1-k+... ) = C(-1, k-1) as a polynomial = (-1)^(k-1)
        coeffs.append(value * (-1) ** (k - 1))
    return tuple(coeffs)


def is_integer_valued(poly: Poly) -> bool:
    return all(c.denominator == 1 for c in to_binomial_basis(poly))


def poly_str(poly: Poly, var: str = "d") -> str:
    if not poly:
        return "0"
    terms = []
    for k in range(len(poly) - 1, -1, -1):
        c = poly[k]
        if c == 0:
            continue
        mag = abs(c)
        coef = "" if (mag == 1 and k > 0) else str(mag)
        body = coef + ("*" if coef and k > 0 else "") + (var if k == 1 else f"{var}^{k}" if k > 1 else "")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


# -- the spec type -----------------------------------------------------------

@dataclass(frozen=True)
class HilbertPolynomialSpec:
    """Hilbert polynomial P of S/I for S = k[x0..xr], with its decompositions.

    ``b_sequence`` is the Gotzmann decomposition of P, ``a_sequence`` the
    Macaulay representation of Q = C(r+d, r) - P, and ``gotzmann`` the
    Gotzmann number (the length of ``b_sequence``, equal to the last a).
    """

    r: int
    poly: Poly
    b_sequence: tuple[int, ...] = field(default=())
    a_sequence: tuple[int, ...] = field(default=())
    gotzmann: int = 0
    gamma: int = 0
    p_const: Optional[int] = None
    text: str = ""

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return to_binomial_basis(self.poly)

    @property
    def is_constant(self) -> bool:
        return len(self.poly) <= 1

    @property
    def is_goodsit(self) -> bool:
        return self.p_const is not None

    def P(self, d: int) -> int:
        return eval_P(self, d)

    def Q(self, d: int) -> int:
        return eval_Q(self, d)

    def __str__(self):
        return self.text or poly_str(self.poly)


def eval_P(spec: HilbertPolynomialSpec, d: int) -> int:
    value = poly_eval(spec.poly, d)
    if value.denominator != 1:
        raise NotHilbertPolynomial(f"P({d}) = {value} is not an integer")
    return int(value)


def eval_Q(spec: HilbertPolynomialSpec, d: int) -> int:
    return binom(spec.r + d, spec.r) - eval_P(spec, d)


def gotzmann_peel(poly: Poly) -> tuple[int, ...]:
    """Greedy Gotzmann decomposition P = sum_i C(d + b_i - i + 1, b_i)."""
    rest = poly
    bs: list[int] = []
    while rest:
        i = len(bs) + 1
        b = poly_degree(rest)
        if rest[-1] <= 0 or (bs and b > bs[-1]) or len(bs) >= MAX_PEEL_STEPS:
            raise NotHilbertPolynomial("greedy Gotzmann peel failed: not a Hilbert polynomial for this r")
        rest = poly_sub(rest, binomial_poly(b - i + 1, b))
        bs.append(b)
    return tuple(bs)


def _a_sequence(r: int, bs: tuple[int, ...]) -> tuple[int, ...]:
    if not bs:
        return ()
    counts = [sum(1 for b in bs if b == r - 1 - j) for j in range(r)]
    n = max(j for j, c in enumerate(counts) if c)
    a = []
    running = 0
    for j in range(n + 1):
        running += counts[j]
        a.append(running + (1 if j < n else 0))
    return tuple(a)


def macaulay_q(r: int, a_sequence, d: int) -> int:
    """sum_i C(r - i + d - a_i, r - i)."""
    return sum(binom(r - i + d - a, r - i) for i, a in enumerate(a_sequence))


def macaulay_decompose(spec_or_poly, r: Optional[int] = None):
    """Return (b_sequence, a_sequence, g_P) for a Hilbert polynomial."""
    if isinstance(spec_or_poly, HilbertPolynomialSpec):
        r, poly = spec_or_poly.r, spec_or_poly.poly
    else:
        poly = _trim(spec_or_poly)
    if r is None:
        raise ValueError("r is required")
    if poly_degree(poly) >= r:
        raise NotHilbertPolynomial(f"degree {poly_degree(poly)} >= r = {r}")
    bs = gotzmann_peel(poly)
    if not bs:
        # P = 0: the quotient is eventually zero and Q fills S_d
        return (), (), 0
    a = _a_sequence(r, bs)
    g = len(bs)
    if a and a[-1] != g:
        raise AssertionError(f"a_n = {a[-1]} differs from Gotzmann number {g}")
    for d in range(g, g + r + 2):
        q = binom(r + d, r) - poly_eval(poly, d)
        if macaulay_q(r, a, d) != q:
            raise AssertionError(f"Macaulay representation {a} fails at d={d}")
    return bs, a, g


def make_spec(r: int, poly, text: str = "") -> HilbertPolynomialSpec:
    if r < 1:
        raise ValueError("r must be at least 1")
    poly = _trim(poly)
    if not is_integer_valued(poly):
        raise NotHilbertPolynomial(f"{poly_str(poly)} is not integer valued")
    bs, a, g = macaulay_decompose(poly, r)
    gamma = sum(1 for b in bs if b == r - 1)
    p_const = None
    if all(b in (r - 1, 0) for b in bs):
        p_const = len(bs) - gamma
    return HilbertPolynomialSpec(r, poly, bs, a, g, gamma, p_const, text or poly_str(poly))


def goodsit_poly(r: int, gamma: int, p: int) -> Poly:
    """C(r+d, r) - C(r+d-gamma, r) + p."""
    return poly_add(poly_sub(binomial_poly(r, r), binomial_poly(r - gamma, r)), (Fraction(p),))


def parse_spec(text: str, r: int) -> HilbertPolynomialSpec:
    """Parse ``const:c``, ``goodsit:gamma,p`` or ``binom:c0,c1,...``."""
    kind, _, body = text.strip().partition(":")
    try:
        args = [Fraction(x.strip()) for x in body.split(",") if x.strip()]
    except ValueError as exc:
        raise ValueError(f"cannot parse {text!r}") from exc
    if kind == "const" and len(args) == 1:
        poly = _trim([args[0]])
    elif kind == "goodsit" and len(args) == 2:
        gamma, p = args
        if gamma.denominator != 1 or p.denominator != 1 or gamma < 0 or p < 0:
            raise ValueError("goodsit parameters must be nonnegative integers")
        poly = goodsit_poly(r, int(gamma), int(p))
    elif kind == "binom" and args:
        poly = from_binomial_basis(args)
    else:
        raise ValueError(f"cannot parse {text!r}; expected const:c, goodsit:g,p or binom:c0,c1,...")
    return make_spec(r, poly, text.strip())


# -- derived scalars -----------------------------------------------------------

def level(value: int, n: int) -> int:
    """Least l >= -1 with value <= C(n + l, n); C(n-1, n) = 0 covers value 0."""
    if value < 0:
        raise ValueError("negative value")
    l = -1
    while value > binom(n + l, n):
        l += 1
    return l


def energy(value: int, n: int) -> int:
    """The e-function of a value in a ring with n+1 variables.

    [value - C(n+l-1, n)] * l + sum_{0 <= i < l} C(n+i-1, n-1) * i.
    """
    l = level(value, n)
    if l <= 0:
        return 0
    return (value - binom(n + l - 1, n)) * l + sum(binom(n + i - 1, n - 1) * i for i in range(l))


def delta_of(spec: HilbertPolynomialSpec, d: int) -> int:
    """The delta with C(r+delta-1, r) < Q(d) <= C(r+delta, r)."""
    q = eval_Q(spec, d)
    if q <= 0:
        raise ValueError("Q(d) must be positive")
    delta = 0
    while q > binom(spec.r + delta, spec.r):
        delta += 1
    return delta


def gamma_of(spec: HilbertPolynomialSpec) -> int:
    return spec.gamma


def l_e_of(spec: HilbertPolynomialSpec, d: int) -> tuple[int, int]:
    p = eval_P(spec, d)
    return level(p, spec.r), energy(p, spec.r)


def p_of(spec: HilbertPolynomialSpec, d: int) -> int:
    """C(r + delta(d), r) - Q(d)."""
    return binom(spec.r + delta_of(spec, d), spec.r) - eval_Q(spec, d)


def l_e_prime(spec: HilbertPolynomialSpec, d: int) -> tuple[int, int]:
    """l and e of the residual polynomial in k[x1..xr] at degree delta(d)."""
    if spec.r < 2:
        raise UnsupportedDimension("l' and e' need r >= 2")
    p = p_of(spec, d)
    return level(p, spec.r - 1), energy(p, spec.r - 1)


def epsilon_of(r: int, delta: int, d: int) -> int:
    return sum(binom(r + i - 1, r - 1) * i for i in range(delta + 1, d + 1))


@dataclass(frozen=True)
class DerivedScalars:
    d: int
    delta: int
    l: int
    e: int
    rho: int
    p_of_d: int
    alpha: int
    epsilon: int
    discriminant: Optional[Fraction]
    center: Optional[Fraction]
    l_prime: Optional[int]
    e_prime: Optional[int]


def derived_scalars(spec: HilbertPolynomialSpec, d: int) -> DerivedScalars:
    if d < spec.gotzmann:
        raise ValueError(f"d = {d} below the Gotzmann number {spec.gotzmann}")
    r = spec.r
    P = eval_P(spec, d)
    delta = delta_of(spec, d)
    l, e = level(P, r), energy(P, r)
    p = binom(r + delta, r) - eval_Q(spec, d)
    alpha = P - p
    eps = epsilon_of(r, delta, d)
    if r >= 2:
        lp, ep = l_e_prime(spec, d)
        center = Fraction(-p * spec.gamma - d * alpha + eps + p * delta) + Fraction(eps, r)
        disc = center**2 - 8 * p * delta * ep + 8 * ep**2
    else:
        lp = ep = None
        center = disc = None
    return DerivedScalars(d, delta, l, e, binom(r + l, r) - P, p, alpha, eps, disc, center, lp, ep)


# -- finite certification of the asymptotic thresholds ----------------------

def sqrt_gt(x, D) -> bool:
    """sqrt(D) > x, for D >= 0."""
    if x < 0:
        return True
    return D > x * x


def sqrt_lt(x, D) -> bool:
    """sqrt(D) < x, for D >= 0."""
    return x > 0 and D < x * x


def grassmann_discriminant(r: int, dP: int, e: int) -> Fraction:
    return Fraction(dP * dP - 4 * dP * e) + Fraction(2 * (r + 1), r) * e * e


def dp_conditions(spec: HilbertPolynomialSpec, d: int) -> dict[str, bool]:
    """Truth of the inequalities that define D_P, evaluated exactly at d."""
    r = spec.r
    P = eval_P(spec, d)
    l, e = level(P, r), energy(P, r)
    dP = d * P
    D = grassmann_discriminant(r, dP, e)
    out = {"discriminant1": D > 0}
    if D < 0:
        out.update(lowerbound1=False, upperbound1=False)
    else:
        # (dP - sqrtD) / (2dP) < 1/(r+1)  <=>  sqrtD > dP (r-1)/(r+1)
        out["lowerbound1"] = sqrt_gt(Fraction(dP * (r - 1), r + 1), D)
        # |dP - 2e - sqrtD| < 2e  <=>  dP - 4e < sqrtD < dP
        out["upperbound1"] = sqrt_gt(dP - 4 * e, D) and sqrt_lt(dP, D)
    out["asymptotic1"] = e * d <= l * dP and 8 * l < d
    if spec.is_constant:
        # |dP - 2e - sqrtD| < 2  <=>  dP - 2e - 2 < sqrtD < dP - 2e + 2
        out["upperbound2"] = D >= 0 and sqrt_gt(dP - 2 * e - 2, D) and sqrt_lt(dP - 2 * e + 2, D)
    return out


def dup_conditions(spec: HilbertPolynomialSpec, d: int) -> dict[str, bool]:
    """Discriminant positivity and the chain 0 < (C - sqrtD)/2 < 1 < p delta < (C + sqrtD)/2."""
    s = derived_scalars(spec, d)
    C, D = s.center, s.discriminant
    pd = s.p_of_d * s.delta
    out = {"discriminant2": D > 0}
    if D < 0:
        out.update(lowerRootPositive=False, lowerRootBelowOne=False, oneBelowPDelta=1 < pd, pDeltaBelowUpperRoot=False)
        return out
    out["lowerRootPositive"] = sqrt_lt(C, D)          # C - sqrtD > 0
    out["lowerRootBelowOne"] = sqrt_gt(C - 2, D)      # C - sqrtD < 2
    out["oneBelowPDelta"] = 1 < pd
    out["pDeltaBelowUpperRoot"] = sqrt_gt(2 * pd - C, D)  # 2 p delta < C + sqrtD
    return out


def _least_window_start(check, start: int, cap: int) -> Optional[int]:
    d0 = None
    for d in range(cap, start - 1, -1):
        if not all(check(d).values()):
            break
        d0 = d
    return d0


def threshold_DP(spec: HilbertPolynomialSpec, cap: int) -> Optional[int]:
    """Least d0 >= g_P such that every D_P inequality holds on [d0, cap]."""
    if not spec.poly:
        return None
    start = max(spec.gotzmann, 1)
    if cap < start:
        raise ValueError(f"cap {cap} below g_P = {start}")
    return _least_window_start(lambda d: dp_conditions(spec, d), start, cap)


def threshold_Dup(spec: HilbertPolynomialSpec, cap: int) -> Optional[int]:
    """Least d0 >= g_P such that the D^P chain holds on [d0, cap]."""
    if not spec.poly or not spec.is_goodsit or spec.gamma == 0 or spec.r < 2:
        return None
    start = max(spec.gotzmann, 1)
    if cap < start:
        raise ValueError(f"cap {cap} below g_P = {start}")
    return _least_window_start(lambda d: dup_conditions(spec, d), start, cap)
