"""Monomial ideals of S = k[x0..xr]: slices, saturation, Borel tests, regularity,
lex ideals, Gotzmann persistence and the Murai condition."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Optional, Sequence

from .hilbert import HilbertPolynomialSpec, delta_of, eval_Q, eval_P, energy
from .monomials import (
    Monomial,
    MonomialSubspace,
    binom,
    divides,
    enumerate_monomials,
    format_monomial,
    gcd,
    lcm,
    mul,
    permute,
    u_set,
)
from .state import state_vector


class NotBorelFixed(ValueError):
    pass


def _gen_key(m):
    return (sum(m), tuple(-e for e in m))


def minimalize(monomials) -> tuple[Monomial, ...]:
    """Drop every monomial divisible by another one in the list."""
    kept: list[Monomial] = []
    for m in sorted(set(map(tuple, monomials)), key=_gen_key):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    r: int
    generators: tuple[Monomial, ...] = field(default=())

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.r + 1:
                raise ValueError(f"generator {g} has wrong length for r={self.r}")
        object.__setattr__(self, "generators", minimalize(self.generators))

    def __contains__(self, m) -> bool:
        return any(divides(g, m) for g in self.generators)

    @property
    def max_degree(self) -> int:
        return max((sum(g) for g in self.generators), default=0)

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.generators)

    def permuted(self, perm: Sequence[int]) -> "MonomialIdeal":
        return MonomialIdeal(self.r, tuple(permute(g, perm) for g in self.generators))

    def __str__(self):
        return ",".join(format_monomial(g) for g in self.generators)


def ideal_from_subspace(W: MonomialSubspace) -> MonomialIdeal:
    return MonomialIdeal(W.r, W.members)


def degree_slice(I: MonomialIdeal, t: int) -> MonomialSubspace:
    members = set()
    for g in I.generators:
        k = t - sum(g)
        if k >= 0:
            members.update(mul(g, m) for m in enumerate_monomials(I.r, k))
    return MonomialSubspace(I.r, t, tuple(members))


def hilbert_function_quotient(I: MonomialIdeal, t: int) -> int:
    return binom(I.r + t, I.r) - len(degree_slice(I, t))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.r, tuple(lcm(g, h) for g in I.generators for h in J.generators))


def colon_power(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """I : x_j^infinity (erase x_j from every generator)."""
    return MonomialIdeal(I.r, tuple(g[:j] + (0,) + g[j + 1:] for g in I.generators))


def saturate(I: MonomialIdeal) -> MonomialIdeal:
    """I : (x0..xr)^infinity as the intersection of the colons by each x_j^infinity."""
    if not I.generators:
        return I
    out = None
    for j in range(I.r + 1):
        colon = colon_power(I, j)
        out = colon if out is None else intersect(out, colon)
    return out


def is_borel_fixed(I: MonomialIdeal) -> bool:
    for m in I.generators:
        for i in range(I.r):
            if m[i + 1] > 0:
                moved = list(m)
                moved[i] += 1
                moved[i + 1] -= 1
                if tuple(moved) not in I:
                    return False
    return True


def borel_permutation(I: MonomialIdeal, fix_first: bool = False) -> Optional[tuple[int, ...]]:
    """First variable permutation (x_i -> x_perm[i]) that makes I Borel-fixed."""
    for perm in permutations(range(I.r + 1)):
        if fix_first and perm[0] != 0:
            continue
        if is_borel_fixed(I.permuted(perm)):
            return perm
    return None


def regularity_borel(I: MonomialIdeal, permute_ok: bool = False) -> int:
    """Regularity of sat(I), read off as its largest minimal-generator degree.

    Only valid for Borel-fixed saturations; with ``permute_ok`` a coordinate
    permutation making the saturation Borel-fixed is searched for first.
    """
    sat = saturate(I)
    if not is_borel_fixed(sat):
        perm = borel_permutation(sat) if permute_ok else None
        if perm is None:
            raise NotBorelFixed(f"saturation of <{I}> is not Borel-fixed; general regularity is not supported")
        sat = sat.permuted(perm)
    return sat.max_degree


def lex_ideal(spec: HilbertPolynomialSpec) -> MonomialIdeal:
    """Saturated lex ideal with quotient Hilbert polynomial P."""
    r, a = spec.r, spec.a_sequence
    gens = []
    prev = 1
    prefix = [0] * (r + 1)
    for i, ai in enumerate(a):
        g = list(prefix)
        g[i] += ai - prev + 1
        gens.append(tuple(g))
        prefix[i] += ai - prev
        prev = ai
    return MonomialIdeal(r, tuple(gens))


def s1_times(W: MonomialSubspace) -> MonomialSubspace:
    r = W.r
    units = [tuple(1 if j == i else 0 for j in range(r + 1)) for i in range(r + 1)]
    return MonomialSubspace(r, W.d + 1, tuple(mul(w, x) for w in W.members for x in units))


def persistence_check(W: MonomialSubspace, spec: HilbertPolynomialSpec) -> bool:
    """Minimal growth dim S1 W = Q(d+1), certifying [W] in Hilb^P."""
    d = W.d
    if d < spec.gotzmann:
        raise ValueError(f"d = {d} below the Gotzmann number {spec.gotzmann}")
    if len(W) != eval_Q(spec, d):
        raise ValueError(f"|W| = {len(W)} but Q({d}) = {eval_Q(spec, d)}")
    return len(s1_times(W)) == eval_Q(spec, d + 1)


@dataclass(frozen=True)
class MuraiResult:
    holds: bool
    divisor: Optional[Monomial]
    indices: tuple  # (n, i or None) for each excluded monomial n

    def __bool__(self):
        return self.holds


def murai_check(W: MonomialSubspace, spec: HilbertPolynomialSpec) -> MuraiResult:
    """Common divisor of degree d - delta, and a U_i-closed excluded set."""
    d, r = W.d, W.r
    if len(W) != eval_Q(spec, d) or d < spec.gotzmann:
        raise ValueError("murai_check needs |W| = Q(d) and d >= g_P")
    want = d - delta_of(spec, d)
    common = gcd(W.members) or (0,) * (r + 1)
    divisor = None
    if sum(common) >= want:
        take, left = [], want
        for e in common:
            take.append(min(e, left))
            left -= take[-1]
        divisor = tuple(take)
    excluded = W.complement()
    out = set(excluded.members)
    indices = []
    ok = divisor is not None
    for n in excluded.members:
        found = next((i for i in range(r + 1) if u_set(i, n).member_set <= out), None)
        indices.append((n, found))
        ok = ok and found is not None
    return MuraiResult(ok, divisor, tuple(indices))


def general1_bullets(V: MonomialSubspace, spec: HilbertPolynomialSpec) -> dict[str, bool]:
    """Structural properties of a worst point V of Gr(S_d, P(d)).

    V is the small side (|V| = P(d)).  The distinguished variable is the
    first coordinate of maximal state.
    """
    d, r = V.d, V.r
    P = eval_P(spec, d)
    if len(V) != P:
        raise ValueError(f"|V| = {len(V)} but P({d}) = {P}")
    e = energy(P, r)
    c = state_vector(V).coords
    beta = max(range(r + 1), key=lambda i: (c[i], -i))
    members = V.member_set
    comp_ideal = ideal_from_subspace(V.complement())
    return {
        "maxCoordinate": d * P - 2 * e < c[beta] <= d * P - e,
        "commonPower": all(m[beta] >= d // 2 for m in V.members),
        "uClosure": all(u_set(beta, n).member_set <= members for n in V.members),
        "borelPermutation": borel_permutation(comp_ideal) is not None,
    }
