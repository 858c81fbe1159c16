"""Worst unstable monomial subspaces: exhaustive search and closed-form constructions.

``brute_force_Z`` maximizes the state norm over all b-subsets of M_d;
``brute_force_X`` restricts to subsets that are Hilbert points (minimal
growth).  ``construct_constant`` and ``construct_goodsit`` build the
maximizers directly for constant P and for P = C(r+d,r) - C(r+d-gamma,r) + p.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from . import kernels
from .hilbert import (
    HilbertPolynomialSpec,
    eval_Q,
    goodsit_poly,
    level,
    make_spec,
    threshold_DP,
    threshold_Dup,
)
from .ideals import (
    borel_permutation,
    ideal_from_subspace,
    persistence_check,
    saturate,
)
from .monomials import (
    MonomialSubspace,
    binom,
    enumerate_monomials,
    lex_cosegment,
    lex_segment,
)
from .state import OnePS, adapted_one_ps, dist0_sq, norm_sq, state_vector

DEFAULT_BUDGET = 10**7
DEFAULT_CAP = 200
_INT64_SAFE = 1 << 62


class BudgetExceeded(RuntimeError):
    def __init__(self, count: int, budget: int):
        super().__init__(f"search needs {count} subsets, budget is {budget}")
        self.count = count
        self.budget = budget


def default_budget() -> int:
    env = os.environ.get("GIT_LAB_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass
class WorstReport:
    r: int
    d: int
    b: int
    maximizers: list[MonomialSubspace]
    max_norm_sq: int
    dist0_sq: Fraction
    adapted: list[Optional[OnePS]]
    method: str
    searched_count: int
    orbit_representatives: list[MonomialSubspace]
    spec: Optional[str] = None
    unrestricted_max_norm_sq: Optional[int] = None
    window: Optional[dict] = None
    checks: list[dict] = field(default_factory=list)

    @property
    def window_certified(self) -> bool:
        return bool(self.window and self.window.get("certified"))


def _report(r, d, b, maximizers, method, searched, **extra) -> WorstReport:
    maximizers = sorted(set(maximizers), key=lambda w: w.members, reverse=True)
    states = [state_vector(w) for w in maximizers]
    norms = {norm_sq(s) for s in states}
    if len(norms) > 1:
        raise AssertionError(f"maximizers with different norms {sorted(norms)}")
    best = norms.pop() if norms else 0
    reps = sorted({w.canonical() for w in maximizers}, key=lambda w: w.members, reverse=True)
    return WorstReport(
        r=r,
        d=d,
        b=b,
        maximizers=maximizers,
        max_norm_sq=best,
        dist0_sq=dist0_sq(states[0]) if states else Fraction(0),
        adapted=[adapted_one_ps(s) for s in states],
        method=method,
        searched_count=searched,
        orbit_representatives=reps,
        **extra,
    )


def _exponent_table(r: int, d: int):
    mons = enumerate_monomials(r, d)
    return mons, np.ascontiguousarray(np.array(mons, dtype=np.int64).reshape(len(mons), r + 1))


def _guard(total: int, budget: Optional[int], d: int, b: int):
    budget = default_budget() if budget is None else budget
    if total > budget:
        raise BudgetExceeded(total, budget)
    if (d * b) ** 2 >= _INT64_SAFE:
        raise OverflowError("state norms exceed the 64-bit kernel range")


def _subspaces(r, d, mons, combos):
    return [MonomialSubspace(r, d, tuple(mons[i] for i in c)) for c in combos]


def brute_force_Z(r: int, d: int, b: int, budget: Optional[int] = None, prune: bool = False) -> WorstReport:
    """All b-dimensional monomial subspaces of S_d with maximal state norm."""
    mons, exps = _exponent_table(r, d)
    n = len(mons)
    if not 0 <= b <= n:
        raise ValueError(f"b = {b} outside 0..{n}")
    total = binom(n, b)
    _guard(total, budget, d, b)
    if prune:
        _, combos = kernels.bnb_maximizers(exps, b, d)
    else:
        norms = kernels.subset_norms(exps, b, total)
        best = norms.max()
        combos = [kernels.unrank_combination(n, b, int(i)) for i in np.flatnonzero(norms == best)]
    return _report(r, d, b, _subspaces(r, d, mons, combos), "brute", total)


def brute_force_X(r: int, spec: HilbertPolynomialSpec, d: int, budget: Optional[int] = None) -> WorstReport:
    """Maximal state norm among Q(d)-subsets of M_d that pass the persistence test."""
    if spec.r != r:
        raise ValueError("spec and r disagree")
    if d < spec.gotzmann:
        raise ValueError(f"d = {d} below the Gotzmann number {spec.gotzmann}")
    b = eval_Q(spec, d)
    mons, exps = _exponent_table(r, d)
    n = len(mons)
    total = binom(n, b)
    _guard(total, budget, d, b)
    norms = kernels.subset_norms(exps, b, total)
    found: list[MonomialSubspace] = []
    for level_value in np.unique(norms)[::-1]:
        for i in np.flatnonzero(norms == level_value):
            c = kernels.unrank_combination(n, b, int(i))
            W = MonomialSubspace(r, d, tuple(mons[j] for j in c))
            if persistence_check(W, spec):
                found.append(W)
        if found:
            break
    if not found:
        raise AssertionError(f"no Hilbert point found for {spec} at d={d}")
    return _report(r, d, b, found, "brute", total, spec=str(spec), unrestricted_max_norm_sq=int(norms.max()))


def z_maximizers(r: int, d: int, b: int, budget: Optional[int] = None) -> list[MonomialSubspace]:
    """Z_d^b by searching whichever of b and its complement size is smaller.

    Relies on complement duality of maximizers, which the duality suite
    checks independently by searching both sides.
    """
    n = binom(r + d, r)
    if b <= n - b:
        return brute_force_Z(r, d, b, budget).maximizers
    return [w.complement() for w in brute_force_Z(r, d, n - b, budget).maximizers]


def _window(threshold, cap, d) -> dict:
    return {"threshold": threshold, "cap": cap, "certified": threshold is not None and threshold <= d <= cap}


def _point_checks(W: MonomialSubspace, spec: HilbertPolynomialSpec, fix_first: bool) -> dict:
    ideal = ideal_from_subspace(W)
    perm = borel_permutation(ideal, fix_first=fix_first)
    if perm is None and fix_first:
        perm = borel_permutation(ideal)
    return {
        "persistence": persistence_check(W, spec),
        "borelPermutation": perm,
    }


def construct_constant(r: int, c: int, d: int, budget: Optional[int] = None, cap: int = DEFAULT_CAP) -> WorstReport:
    """Worst Hilbert points for constant P = c: x0^(d-l) W' + A_{C(r+l,r),d}."""
    if c < 1:
        raise ValueError("c must be positive")
    spec = make_spec(r, (Fraction(c),), f"const:{c}")
    if d < spec.gotzmann:
        raise ValueError(f"d = {d} below the Gotzmann number {spec.gotzmann}")
    l = level(c, r)
    rho = binom(r + l, r) - c
    tail = lex_cosegment(r, d, binom(r + l, r))
    lead = tuple([d - l] + [0] * r)
    sub = z_maximizers(r - 1, l, rho, budget)
    out = [tail.union(w.embed().times(lead)) for w in sub]
    checks = []
    for W in out:
        info = _point_checks(W, spec, fix_first=False)
        powers = [tuple(d if j == i else 0 for j in range(r + 1)) for i in range(1, r + 1)]
        info["supportIsPoint"] = all(m in W for m in powers)
        checks.append(info)
    threshold = threshold_DP(spec, max(cap, d))
    report = _report(r, d, eval_Q(spec, d), out, "construct", len(sub), spec=spec.text,
                     window=_window(threshold, max(cap, d), d))
    report.checks = [checks[out.index(w)] for w in report.maximizers]
    return report


def construct_goodsit(r: int, gamma: int, p: int, d: int, budget: Optional[int] = None,
                      cap: int = DEFAULT_CAP) -> WorstReport:
    """Worst Hilbert points x0^gamma (L_{C(r+delta-1,r),delta} + W') for gamma >= 1."""
    if gamma == 0:
        raise ValueError("gamma = 0 is the constant case; use construct_constant")
    if r < 2:
        raise ValueError("r = 1 leaves a one-variable residual ring; unsupported")
    spec = make_spec(r, goodsit_poly(r, gamma, p), f"goodsit:{gamma},{p}")
    if d < spec.gotzmann:
        raise ValueError(f"d = {d} below the Gotzmann number {spec.gotzmann}")
    delta = d - gamma
    head = lex_segment(r, delta, binom(r + delta - 1, r))
    size = binom(r + delta - 1, r - 1) - p
    try:
        sub = z_maximizers(r - 1, delta, size, budget)
        sub_method = "brute"
    except BudgetExceeded:
        sub = construct_constant(r - 1, p, delta, budget).maximizers
        sub_method = "construct"
    lead = tuple([gamma] + [0] * r)
    out = [head.union(w.embed()).times(lead) for w in sub]
    z0 = MonomialSubspace(r, delta, enumerate_monomials(r, delta)).times(lead)
    checks = []
    for W, w in zip(out, sub):
        info = _point_checks(W, spec, fix_first=True)
        info["z0"] = z0
        info["z1"] = w
        info["subSearch"] = sub_method
        checks.append(info)
    threshold = threshold_Dup(spec, max(cap, d))
    report = _report(r, d, eval_Q(spec, d), out, "construct", len(sub), spec=spec.text,
                     window=_window(threshold, max(cap, d), d))
    report.checks = [checks[out.index(w)] for w in report.maximizers]
    return report


def construct(spec: HilbertPolynomialSpec, d: int, budget: Optional[int] = None) -> WorstReport:
    """Dispatch to the construction that fits the shape of P."""
    if spec.is_constant and spec.poly:
        return construct_constant(spec.r, int(spec.poly[0]), d, budget)
    if spec.is_goodsit and spec.gamma >= 1:
        return construct_goodsit(spec.r, spec.gamma, spec.p_const, d, budget)
    raise ValueError(f"no closed-form construction for {spec}")


def verify_duality(r: int, d: int, b: int, budget: Optional[int] = None) -> bool:
    """Complement is a bijection between Z_d^b and Z_d^(N-b); distances agree."""
    n = binom(r + d, r)
    small = brute_force_Z(r, d, b, budget)
    large = brute_force_Z(r, d, n - b, budget)
    if {w.complement() for w in small.maximizers} != set(large.maximizers):
        return False
    return small.dist0_sq == large.dist0_sq


def worst_saturations(spec: HilbertPolynomialSpec, d: int, budget: Optional[int] = None) -> frozenset:
    """Saturated ideals of every constructed worst point at degree d."""
    report = construct(spec, d, budget)
    return frozenset(saturate(ideal_from_subspace(w)) for w in report.maximizers)


def stability_window_check(r: int, gamma: int, p: int, d_low: int, d_high: int,
                           budget: Optional[int] = None) -> bool:
    """Constructed worst points have the same saturations for every d in the window."""
    if gamma == 0:
        spec = make_spec(r, (Fraction(p),), f"const:{p}")
    else:
        spec = make_spec(r, goodsit_poly(r, gamma, p), f"goodsit:{gamma},{p}")
    seen = {worst_saturations(spec, d, budget) for d in range(d_low, d_high + 1)}
    return len(seen) == 1
