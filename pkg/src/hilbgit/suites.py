"""Verification suites: parameter grids of exact checks, one case per grid point.

Each case compares the canonical serialization of an expected value with
the computed one.  A case that would exceed the enumeration budget is
recorded with status ``budget`` and the suite moves on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Optional

from .hilbert import (
    energy,
    eval_P,
    eval_Q,
    goodsit_poly,
    l_e_of,
    level,
    make_spec,
    parse_spec,
    threshold_DP,
    threshold_Dup,
)
from .ideals import (
    general1_bullets,
    hilbert_function_quotient,
    ideal_from_subspace,
    lex_ideal,
    murai_check,
    persistence_check,
    regularity_borel,
    saturate,
)
from .kstability import futaki_expansion, standard_lambda
from .monomials import MonomialSubspace, binom, enumerate_monomials, lex_segment
from .serialize import canonical, to_jsonable
from .state import state_vector
from .worst import (
    BudgetExceeded,
    brute_force_Z,
    construct,
    default_budget,
    stability_window_check,
    verify_duality,
)

SUITES = ("duality", "useless", "opt1", "general1", "maximality", "sharpness",
          "unchanged", "regularity", "futaki", "murai-iff-r2")


@dataclass
class SuiteResult:
    suite: str
    cases: list[dict] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        status = [c["status"] for c in self.cases]
        return {
            "total": len(status),
            "passed": status.count("pass"),
            "failed": status.count("fail"),
            "budget": status.count("budget"),
        }

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.cases)

    def exit_code(self) -> int:
        s = self.summary
        if s["failed"]:
            return 1
        return 3 if s["budget"] else 0

    def as_dict(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "summary": self.summary}


def _spec(r: int, gamma: int, p: int):
    if gamma == 0:
        return make_spec(r, (Fraction(p),), f"const:{p}")
    return make_spec(r, goodsit_poly(r, gamma, p), f"goodsit:{gamma},{p}")


def l_P(r: int, gamma: int, p: int) -> int:
    """Level of the residual constant: in S when gamma = 0, in S' otherwise."""
    if p == 0:
        return -1
    return level(p, r) if gamma == 0 else level(p, r - 1)


def _grid(params: dict, key: str, default: Iterable) -> list:
    value = params.get(key)
    if value is None:
        return list(default)
    return list(value) if isinstance(value, (list, tuple, range)) else [value]


def _specs(params: dict, default: list[tuple[int, str]]) -> list[tuple[int, str]]:
    if params.get("poly"):
        return [(r, params["poly"]) for r in _grid(params, "r", [2])]
    if params.get("r") is not None:
        rs = set(_grid(params, "r", []))
        return [(r, s) for r, s in default if r in rs]
    return default


# -- case builders: each yields (params, thunk returning (expected, got)) ----------

def _duality(params, budget):
    for r in _grid(params, "r", [2]):
        for d in _grid(params, "d", [3, 4]):
            for b in range(binom(r + d, r) + 1):
                yield {"r": r, "d": d, "b": b}, lambda r=r, d=d, b=b: (True, verify_duality(r, d, b, budget))


def _useless(params, budget):
    for r, text in _specs(params, [(2, "const:3"), (2, "goodsit:1,0")]):
        for d in _grid(params, "d", [3]):
            def run(r=r, text=text, d=d):
                spec = parse_spec(text, r)
                maxim = brute_force_Z(r, d, eval_Q(spec, d), budget).maximizers
                passing = sum(persistence_check(W, spec) for W in maxim)
                got = "all" if passing == len(maxim) else "none" if passing == 0 else "some"
                return ("all" if spec.is_constant else "none"), got
            yield {"r": r, "spec": text, "d": d}, run


_CONSTANT_WINDOWS = [(2, "const:2"), (2, "const:3"), (2, "const:4"), (3, "const:4")]


def _certified_ds(spec, params, cap):
    if params.get("d") is not None:
        return _grid(params, "d", [])
    t = threshold_DP(spec, cap)
    return [] if t is None else [t, t + 1]


def _small_side(r, d, b, budget):
    """Brute force, falling back to exact pruning when plain enumeration is over budget."""
    try:
        return brute_force_Z(r, d, b, budget)
    except BudgetExceeded:
        return brute_force_Z(r, d, b, budget=binom(binom(r + d, r), b), prune=True)


def _opt1(params, budget):
    cap = params.get("cap") or 200
    for r, text in _specs(params, _CONSTANT_WINDOWS):
        spec = parse_spec(text, r)
        for d in _certified_ds(spec, params, cap):
            def run(r=r, spec=spec, d=d):
                P = eval_P(spec, d)
                _, e = l_e_of(spec, d)
                rep = _small_side(r, d, P, budget)
                return [d * P - e], sorted({max(state_vector(w).coords) for w in rep.maximizers})
            yield {"r": r, "spec": text, "d": d}, run


def _general1(params, budget):
    cap = params.get("cap") or 200
    for r, text in _specs(params, _CONSTANT_WINDOWS):
        spec = parse_spec(text, r)
        for d in _certified_ds(spec, params, cap)[:1]:
            def run(r=r, spec=spec, d=d):
                rep = _small_side(r, d, eval_P(spec, d), budget)
                bullets = [general1_bullets(w, spec) for w in rep.maximizers]
                keys = ("maxCoordinate", "commonPower", "uClosure", "borelPermutation")
                return {k: True for k in keys}, {k: all(b[k] for b in bullets) for k in keys}
            yield {"r": r, "spec": text, "d": d}, run


def _maximality(params, budget):
    for r in _grid(params, "r", [2]):
        for d in _grid(params, "d", [2, 3, 4]):
            n = binom(r + d, r)
            for b in range(1, n):
                def run(r=r, d=d, b=b, n=n):
                    if binom(n, b) > budget:
                        raise BudgetExceeded(binom(n, b), budget)
                    l, e = level(b, r), energy(b, r)
                    mons = enumerate_monomials(r, d)
                    inner = set(lex_segment(r, d, binom(r + l - 1, r)).members)
                    outer = set(lex_segment(r, d, binom(r + l, r)).members)
                    bound, sandwich, attained = True, True, False
                    for combo in combinations(mons, b):
                        c0 = sum(m[0] for m in combo)
                        if c0 > d * b - e:
                            bound = False
                        elif c0 == d * b - e:
                            attained = True
                            chosen = set(combo)
                            sandwich = sandwich and inner <= chosen <= outer
                    want = {"bound": True, "equalityForcesSandwich": True, "attained": True}
                    return want, {"bound": bound, "equalityForcesSandwich": sandwich, "attained": attained}
                yield {"r": r, "d": d, "b": b}, run


def _construction_grid(params, rs=(2, 3), gammas=range(0, 3), ps=range(0, 4)):
    if params.get("poly"):
        for r in _grid(params, "r", [2]):
            spec = parse_spec(params["poly"], r)
            yield r, spec.gamma, spec.p_const, spec
        return
    for r in _grid(params, "r", rs):
        for g in _grid(params, "gamma", gammas):
            for p in _grid(params, "p", ps):
                if g + p >= 1:
                    yield r, g, p, _spec(r, g, p)


def _sharpness(params, budget):
    for r, g, p, spec in _construction_grid(params):
        for d in _grid(params, "d", [spec.gotzmann, spec.gotzmann + 1]):
            def run(spec=spec, d=d):
                rep = construct(spec, d, budget)
                expected = [eval_P(spec, d + t) for t in range(6)]
                got = sorted({tuple(hilbert_function_quotient(ideal_from_subspace(W), d + t) for t in range(6))
                              for W in rep.maximizers})
                return [expected], [list(x) for x in got]
            yield {"r": spec.r, "spec": spec.text, "d": d}, run


def _unchanged(params, budget):
    cap = params.get("cap") or 200
    for r, g, p, spec in _construction_grid(params, rs=(2, 3), gammas=(1, 2, 3), ps=(0, 1, 2, 3)):
        if g == 0:
            t = threshold_DP(spec, cap)
        else:
            t = threshold_Dup(spec, cap)
        # without a certified start, cover every 4-window from g_P through g_P + 3
        starts = [t] if t is not None else list(range(spec.gotzmann, spec.gotzmann + 4))
        if params.get("d") is not None:
            starts = _grid(params, "d", [])
        for start in starts:
            yield ({"r": r, "spec": spec.text, "dLow": start, "dHigh": start + 3, "certified": t is not None},
                   lambda r=r, g=g, p=p, start=start: (True, stability_window_check(r, g, p, start, start + 3, budget)))


def _regularity(params, budget):
    for r, g, p, spec in _construction_grid(params, rs=(2, 3), gammas=range(0, 3), ps=range(0, 5)):
        for d in _grid(params, "d", [spec.gotzmann]):
            def run(r=r, g=g, p=p, spec=spec, d=d):
                rep = construct(spec, d, budget)
                worst = sorted({regularity_borel(saturate(ideal_from_subspace(W)), permute_ok=True)
                                for W in rep.maximizers})
                lex = regularity_borel(lex_ideal(spec))
                return {"worst": [l_P(r, g, p) + g + 1], "lex": g + p}, {"worst": worst, "lex": lex}
            yield {"r": r, "spec": spec.text, "d": d}, run


def _futaki(params, budget):
    cases = [(r, g, p) for r in (2, 3) for g in (1, 2, 3) for p in (0, 1)]
    cases += [(2, 0, c) for c in (1, 3, 4)]
    if params.get("poly") or params.get("r") is not None:
        cases = [(r, g, p) for r, g, p, _ in _construction_grid(params, gammas=(1, 2, 3), ps=(0, 1))]
    for r, g, p in cases:
        spec = _spec(r, g, p)

        def run(r=r, g=g, p=p, spec=spec):
            rep = construct(spec, spec.gotzmann, budget)
            lam = standard_lambda(r)
            if g == 0:
                lam = -lam
                expected = {"A0": Fraction(-r), "A1": Fraction((r + 1) * energy(p, r), p)}
            else:
                expected = {"A0": Fraction(-1), "A1": Fraction((r + 1) * (g - 1), 2)}
            got = set()
            for W in rep.maximizers:
                I = saturate(ideal_from_subspace(W))
                f = futaki_expansion(I, lam, max(spec.gotzmann, I.max_degree) + r + 2)
                got.add((f.A0, f.A1))
            got = [{"A0": a0, "A1": a1} for a0, a1 in sorted(got)]
            return [expected], got
        yield {"r": r, "spec": spec.text, "lambda": "-" if g == 0 else "+"}, run


def _murai(params, budget):
    for r, text in _specs(params, [(2, "const:3"), (2, "goodsit:1,0")]):
        for d in _grid(params, "d", [3]):
            def run(r=r, text=text, d=d):
                spec = parse_spec(text, r)
                mons = enumerate_monomials(r, d)
                b = eval_Q(spec, d)
                total = binom(len(mons), b)
                if total > budget:
                    raise BudgetExceeded(total, budget)
                disagree = 0
                for combo in combinations(mons, b):
                    W = MonomialSubspace(r, d, combo)
                    if bool(murai_check(W, spec)) != persistence_check(W, spec):
                        disagree += 1
                return {"subsets": total, "disagreements": 0}, {"subsets": total, "disagreements": disagree}
            yield {"r": r, "spec": text, "d": d}, run


_BUILDERS: dict[str, Callable] = {
    "duality": _duality,
    "useless": _useless,
    "opt1": _opt1,
    "general1": _general1,
    "maximality": _maximality,
    "sharpness": _sharpness,
    "unchanged": _unchanged,
    "regularity": _regularity,
    "futaki": _futaki,
    "murai-iff-r2": _murai,
}


def run_suite(name: str, params: Optional[dict] = None) -> SuiteResult:
    """Run one suite over its default grid, narrowed by params (r, d, poly, gamma, p, cap, budget)."""
    if name not in _BUILDERS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    params = dict(params or {})
    budget = params.pop("budget", None) or default_budget()
    result = SuiteResult(name)
    for case_params, thunk in _BUILDERS[name](params, budget):
        try:
            expected, got = thunk()
        except BudgetExceeded as exc:
            result.cases.append({"params": case_params, "expected": None,
                                 "got": {"budgetExceeded": exc.count, "budget": exc.budget},
                                 "pass": False, "status": "budget"})
            continue
        ok = canonical(expected) == canonical(got)
        result.cases.append({"params": case_params, "expected": to_jsonable(expected),
                             "got": to_jsonable(got), "pass": ok, "status": "pass" if ok else "fail"})
    return result
