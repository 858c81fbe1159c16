"""Canonical JSON and text renderings of every report type.

All numbers stay exact: integers as JSON integers, rationals as
``{"num": n, "den": d}`` in lowest terms.  Key order is fixed by the
builders below, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import is_dataclass
from fractions import Fraction

from .hilbert import DerivedScalars, HilbertPolynomialSpec, poly_str, to_binomial_basis
from .ideals import MonomialIdeal, MuraiResult
from .kstability import FutakiExpansion, KInstabilityReport
from .monomials import MonomialSubspace, format_monomial
from .state import OnePS, StateVector, adapted_one_ps, dist0_sq, norm_sq
from .worst import WorstReport


def rational(x) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def _poly(coeffs) -> list:
    return [rational(c) for c in coeffs]


def state_json(s: StateVector) -> dict:
    dist = dist0_sq(s)
    lam = adapted_one_ps(s)
    return {
        "c": list(s.coords),
        "normSq": norm_sq(s),
        "d": s.d,
        "b": s.b,
        "dist0SqNum": dist.numerator,
        "dist0SqDen": dist.denominator,
        "lambda": list(lam.weights) if lam is not None else None,
    }


def spec_json(spec: HilbertPolynomialSpec) -> dict:
    return {
        "r": spec.r,
        "poly": poly_str(spec.poly),
        "binomialCoefficients": _poly(to_binomial_basis(spec.poly)),
        "bSequence": list(spec.b_sequence),
        "aSequence": list(spec.a_sequence),
        "gotzmann": spec.gotzmann,
        "gamma": spec.gamma,
        "p": spec.p_const,
    }


def scalars_json(s: DerivedScalars) -> dict:
    def ex(x):
        if x is None:
            return None
        return x if isinstance(x, int) else rational(x)

    return {
        "d": s.d,
        "delta": s.delta,
        "l": s.l,
        "e": s.e,
        "rho": s.rho,
        "pOfD": s.p_of_d,
        "alpha": s.alpha,
        "epsilon": s.epsilon,
        "discriminant": ex(s.discriminant),
        "center": ex(s.center),
        "lPrime": s.l_prime,
        "ePrime": s.e_prime,
    }


def ideal_json(I: MonomialIdeal) -> list:
    return [format_monomial(g) for g in I.generators]


def _check_value(v):
    if isinstance(v, MonomialSubspace):
        return str(v)
    if isinstance(v, tuple):
        return list(v)
    return v


def worst_json(rep: WorstReport) -> dict:
    out = {"r": rep.r, "d": rep.d, "b": rep.b}
    if rep.spec is not None:
        out["spec"] = rep.spec
    out.update({
        "method": rep.method,
        "searchedCount": rep.searched_count,
        "maxNormSq": rep.max_norm_sq,
        "dist0Sq": rational(rep.dist0_sq),
        "maximizers": [str(w) for w in rep.maximizers],
        "adapted": [list(a.weights) if a is not None else None for a in rep.adapted],
        "orbitRepresentatives": [str(w) for w in rep.orbit_representatives],
    })
    if rep.unrestricted_max_norm_sq is not None:
        out["unrestrictedMaxNormSq"] = rep.unrestricted_max_norm_sq
    if rep.window is not None:
        out["window"] = dict(rep.window)
        out["windowCertified"] = rep.window_certified
    if rep.checks:
        out["checks"] = [{k: _check_value(v) for k, v in c.items()} for c in rep.checks]
    return out


def futaki_json(f: FutakiExpansion, destabilized: bool) -> dict:
    return {
        "lambda": list(f.lam.weights),
        "A0": rational(f.A0),
        "A1": rational(f.A1),
        "destabilized": destabilized,
    }


def k_report_json(k: KInstabilityReport) -> dict:
    return {
        "plus": futaki_json(k.plus, k.plus.A1 > 0),
        "minus": futaki_json(k.minus, k.minus.A1 > 0),
        "destabilized": k.destabilized,
    }


def to_jsonable(value):
    """Convert library objects (recursively) to plain JSON data."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else rational(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, StateVector):
        return state_json(value)
    if isinstance(value, OnePS):
        return list(value.weights)
    if isinstance(value, MonomialSubspace):
        return str(value)
    if isinstance(value, MonomialIdeal):
        return ideal_json(value)
    if isinstance(value, HilbertPolynomialSpec):
        return spec_json(value)
    if isinstance(value, DerivedScalars):
        return scalars_json(value)
    if isinstance(value, WorstReport):
        return worst_json(value)
    if isinstance(value, KInstabilityReport):
        return k_report_json(value)
    if isinstance(value, FutakiExpansion):
        return futaki_json(value, value.A1 > 0)
    if isinstance(value, MuraiResult):
        return {
            "holds": value.holds,
            "divisor": format_monomial(value.divisor) if value.divisor is not None else None,
            "closures": [{"monomial": format_monomial(n), "index": i} for n, i in value.indices],
        }
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, frozenset, set)):
        items = [to_jsonable(v) for v in value]
        if isinstance(value, (set, frozenset)):
            items.sort(key=canonical)
        return items
    if is_dataclass(value):
        raise TypeError(f"no serializer for {type(value).__name__}")
    raise TypeError(f"cannot serialize {value!r}")


def canonical(value) -> str:
    """Compact JSON with fixed key order; the basis for exact comparisons."""
    return json.dumps(to_jsonable(value), separators=(",", ":"), ensure_ascii=True)


def _text(data, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        if set(data) == {"num", "den"}:
            return [pad + _scalar(data)]
        for k, v in data.items():
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(data, list):
        if not data:
            return [pad + "(none)"]
        for v in data:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(pad + "-")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(data))
    return lines


def _flat(v) -> bool:
    if isinstance(v, dict):
        return set(v) == {"num", "den"}
    return all(not isinstance(x, (dict, list)) or _flat(x) for x in v)


def _scalar(v) -> str:
    if isinstance(v, dict) and set(v) == {"num", "den"}:
        return str(v["num"]) if v["den"] == 1 else f"{v['num']}/{v['den']}"
    if isinstance(v, list):
        return "(" + ", ".join(_scalar(x) for x in v) + ")"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def emit_report(value, fmt: str = "json") -> str:
    if fmt == "json":
        return canonical(value)
    if fmt == "text":
        return "\n".join(_text(to_jsonable(value)))
    raise ValueError(f"unknown format {fmt!r}")
