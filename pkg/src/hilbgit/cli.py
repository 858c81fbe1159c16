"""Command-line front end: ``hilbgit <subcommand> [flags]``.

Exit status: 0 ok, 1 verification failure, 2 usage or parse error,
3 enumeration budget refused.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import serialize
from .hilbert import (
    UnsupportedDimension,
    derived_scalars,
    dp_conditions,
    dup_conditions,
    eval_Q,
    parse_spec,
    threshold_DP,
    threshold_Dup,
)
from .ideals import (
    borel_permutation,
    ideal_from_subspace,
    is_borel_fixed,
    MonomialIdeal,
    murai_check,
    persistence_check,
    regularity_borel,
    s1_times,
    saturate,
)
from .kstability import NotEventuallyPolynomial, futaki_expansion, k_instability_report, standard_lambda
from .monomials import MonomialSubspace, binom, parse_monomials
from .state import OnePS, state_vector
from .suites import SUITES, run_suite
from .worst import (
    DEFAULT_CAP,
    BudgetExceeded,
    brute_force_X,
    brute_force_Z,
    construct,
    construct_constant,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.command} needs {' '.join(missing)}")


def _spec(args):
    _require(args, "r", "poly")
    return parse_spec(args.poly, args.r)


def _monomial_list(text: str, r: int):
    return parse_monomials(text.replace("\n", ",").replace(";", ","), r)


def _subspace(args) -> MonomialSubspace:
    _require(args, "r", "members")
    mons = _monomial_list(args.members, args.r)
    if not mons:
        raise UsageError("--members is empty")
    return MonomialSubspace(args.r, sum(mons[0]), tuple(mons))


def _ideal(args) -> MonomialIdeal:
    _require(args, "r")
    if args.ideal:
        with open(args.ideal) as fh:
            text = fh.read()
    elif args.gens:
        text = args.gens
    else:
        raise UsageError("give --ideal FILE or --gens TEXT")
    return MonomialIdeal(args.r, tuple(_monomial_list(text, args.r)))


def _lambda(text: str, r: int) -> OnePS:
    weights = tuple(int(w) for w in text.split(","))
    if len(weights) != r + 1:
        raise UsageError(f"--lambda needs {r + 1} weights")
    return OnePS(weights)


# -- subcommands -----------------------------------------------------------------

def cmd_macaulay(args):
    return serialize.spec_json(_spec(args)), EXIT_OK


def cmd_scalars(args):
    spec = _spec(args)
    _require(args, "d")
    return serialize.scalars_json(derived_scalars(spec, args.d)), EXIT_OK


def cmd_thresholds(args):
    spec = _spec(args)
    cap = args.cap or DEFAULT_CAP
    out = {"r": spec.r, "spec": spec.text, "cap": cap, "DP": threshold_DP(spec, cap), "Dup": None}
    if spec.is_goodsit and spec.r >= 2 and spec.gamma >= 1:
        out["Dup"] = threshold_Dup(spec, cap)
    if args.d is not None:
        out["conditions"] = {"d": args.d, "DP": dp_conditions(spec, args.d)}
        if out["Dup"] is not None or (spec.is_goodsit and spec.gamma >= 1 and spec.r >= 2):
            out["conditions"]["Dup"] = dup_conditions(spec, args.d)
    return out, EXIT_OK


def cmd_state(args):
    W = _subspace(args)
    if args.complement:
        W = W.complement()
    return serialize.state_json(state_vector(W)), EXIT_OK


def cmd_worst_gr(args):
    _require(args, "r", "d", "b")
    n = binom(args.r + args.d, args.r)
    if not 0 <= args.b <= n:
        raise UsageError(f"--b must lie in 0..{n}")
    if args.construct:
        # b-subsets are complements of Hilbert points of the constant polynomial n - b
        c = n - args.b
        if c == 0:
            raise UsageError("b = C(r+d,r) has no constant-polynomial construction")
        return construct_constant(args.r, c, args.d, args.budget, args.cap or DEFAULT_CAP), EXIT_OK
    return brute_force_Z(args.r, args.d, args.b, args.budget, prune=args.prune), EXIT_OK


def cmd_worst_hilb(args):
    spec = _spec(args)
    _require(args, "d")
    if args.brute:
        return brute_force_X(args.r, spec, args.d, args.budget), EXIT_OK
    return construct(spec, args.d, args.budget), EXIT_OK


def _worst_ideals(args) -> list[MonomialIdeal]:
    spec = _spec(args)
    d = args.d if args.d is not None else spec.gotzmann
    return [saturate(ideal_from_subspace(W)) for W in construct(spec, d, args.budget).maximizers]


def cmd_regularity(args):
    ideals = _worst_ideals(args) if args.from_worst else [_ideal(args)]
    out = []
    for I in ideals:
        sat = saturate(I)
        perm = borel_permutation(sat)
        out.append({
            "generators": serialize.ideal_json(I),
            "saturated": sat == I,
            "borelFixed": is_borel_fixed(I),
            "regularity": regularity_borel(sat, permute_ok=True) if perm is not None else None,
            "saturation": serialize.ideal_json(sat),
            "borelPermutation": list(perm) if perm is not None else None,
        })
    return (out[0] if len(out) == 1 else out), EXIT_OK


def cmd_persistence(args):
    spec = _spec(args)
    W = _subspace(args)
    holds = persistence_check(W, spec)
    return {"spec": spec.text, "d": W.d, "b": len(W), "growth": len(s1_times(W)),
            "expected": eval_Q(spec, W.d + 1), "holds": holds}, EXIT_OK


def cmd_murai(args):
    spec = _spec(args)
    W = _subspace(args)
    out = serialize.to_jsonable(murai_check(W, spec))
    out["persistence"] = persistence_check(W, spec)
    return out, EXIT_OK


def cmd_futaki(args):
    if args.from_worst:
        ideals = _worst_ideals(args)
        spec = _spec(args)
    else:
        ideals = [_ideal(args)]
        spec = parse_spec(args.poly, args.r) if args.poly else None
    out = []
    for I in ideals:
        if args.lam:
            f = futaki_expansion(I, _lambda(args.lam, I.r), args.dmin)
            out.append(serialize.futaki_json(f, f.A1 > 0))
        elif spec is not None and args.dmin is None:
            out.append(serialize.k_report_json(k_instability_report(I, spec)))
        else:
            lam = standard_lambda(I.r)
            plus, minus = futaki_expansion(I, lam, args.dmin), futaki_expansion(I, -lam, args.dmin)
            out.append({"plus": serialize.futaki_json(plus, plus.A1 > 0),
                        "minus": serialize.futaki_json(minus, minus.A1 > 0),
                        "destabilized": plus.A1 > 0 or minus.A1 > 0})
    return (out[0] if len(out) == 1 else out), EXIT_OK


def cmd_verify(args):
    _require(args, "suite")
    params = {"r": args.r, "d": args.d, "poly": args.poly, "cap": args.cap, "budget": args.budget}
    result = run_suite(args.suite, {k: v for k, v in params.items() if v is not None})
    return result.as_dict(), result.exit_code()


COMMANDS = {
    "macaulay": (cmd_macaulay, "Gotzmann and Macaulay data of a Hilbert polynomial"),
    "scalars": (cmd_scalars, "derived integer scalars at a degree d"),
    "thresholds": (cmd_thresholds, "least certified degree windows below --cap"),
    "state": (cmd_state, "state vector of a monomial subspace"),
    "worst-gr": (cmd_worst_gr, "maximizers of the state norm on a Grassmannian"),
    "worst-hilb": (cmd_worst_hilb, "worst Hilbert points for a Hilbert polynomial"),
    "regularity": (cmd_regularity, "saturation, Borel test and regularity of an ideal"),
    "persistence": (cmd_persistence, "minimal-growth test for a degree-d monomial set"),
    "murai": (cmd_murai, "common divisor and U-closure test"),
    "futaki": (cmd_futaki, "leading Futaki coefficients of a diagonal test configuration"),
    "verify": (cmd_verify, "run a verification suite"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, help="projective dimension (r+1 variables)")
    common.add_argument("--d", type=int, help="degree")
    common.add_argument("--b", type=int, help="subspace dimension")
    common.add_argument("--poly", metavar="SPEC", help="const:c | goodsit:gamma,p | binom:c0,c1,...")
    common.add_argument("--budget", type=int, metavar="N",
                        help="max subsets to enumerate (default: $GIT_LAB_BUDGET or 10^7)")
    common.add_argument("--cap", type=int, metavar="N", help="upper end of threshold windows")
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="hilbgit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "worst-gr" or name == "worst-hilb":
            mode = p.add_mutually_exclusive_group()
            mode.add_argument("--brute", action="store_true")
            mode.add_argument("--construct", action="store_true")
        if name == "worst-gr":
            p.add_argument("--prune", action="store_true", help="exact branch and bound instead of full streaming")
        if name in ("state", "persistence", "murai"):
            p.add_argument("--members", metavar="TEXT", help="comma-separated monomials, e.g. x0^2*x1,x2^3")
        if name == "state":
            p.add_argument("--complement", action="store_true")
        if name in ("regularity", "futaki"):
            p.add_argument("--ideal", metavar="FILE", help="file listing generators")
            p.add_argument("--gens", metavar="TEXT", help="comma-separated generators")
            p.add_argument("--from-worst", action="store_true", help="use the constructed worst points of --poly")
        if name == "futaki":
            p.add_argument("--lambda", dest="lam", metavar="W", help="weights w0,w1,... summing to zero")
            p.add_argument("--dmin", type=int, help="first sampled degree")
        if name == "verify":
            p.add_argument("--suite", choices=SUITES)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handler = COMMANDS[args.command][0]
    try:
        value, code = handler(args)
    except BudgetExceeded as exc:
        print(f"hilbgit: budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, UnsupportedDimension, NotEventuallyPolynomial, ValueError, OSError) as exc:
        print(f"hilbgit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(serialize.emit_report(value, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
