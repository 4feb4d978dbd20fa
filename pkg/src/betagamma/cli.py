"""Command-line interface: ``betagamma {ope, verify, hilbert, invariants}``.

Exit codes: 0 all checks pass, 1 some check failed, 2 usage or parse error,
3 nothing failed but some check was inconclusive.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import DEFAULT_TRUNC
from .chiral import build_currents, build_sl2_triple, verify_conformal
from .commutant import (
    verify_commutant_membership,
    verify_current_ope,
    verify_howe_inclusion,
    verify_level,
)
from .expr import ExprError, parse_expr
from .fock import ope_singular
from .grring import (
    DEFAULT_DMAX,
    DEFAULT_KMAX,
    DEFAULT_SEED,
    SPACES,
    invariant_dimension,
    jacobian_independence,
    p0_ring,
    triple_symbols,
    verify_compatibility,
    verify_generators_P0,
    verify_weight_zero_generator,
)
from .hilbert import (
    compare_closed_form,
    invariant_series,
    parse_closed_form,
    parse_weights,
)
from .rep import (
    LieRepData,
    RepError,
    builtin_rep,
    direct_sum,
    dual_rep,
    load_rep_file,
    weight_multiset,
)
from .report import VerificationReport, check

SUITES = ("current-ope", "level", "conformal", "commutant", "compat", "howe", "generators", "hilbert", "all")
JACOBIAN_SEEDS = 5


class UsageError(Exception):
    pass


def _load(args) -> LieRepData:
    if getattr(args, "rep_file", None):
        return load_rep_file(args.rep_file)
    return builtin_rep(args.rep)


def _merge(target: VerificationReport, sub: VerificationReport) -> None:
    target.extend(sub)
    if sub.config:
        target.config[sub.suite] = sub.config


def _is_sl2_adjoint(rep: LieRepData) -> bool:
    return rep.name == "sl2-adjoint"


def suite_hilbert(rep: LieRepData | None, weights, closed, trunc: int, dmax: int) -> VerificationReport:
    report = VerificationReport("hilbert")
    if weights is not None:
        series = invariant_series(weights, trunc)
        if closed is not None:
            _merge(report, compare_closed_form(series, *closed, label="hilbert"))
        return report
    spaces = {
        "P0-full": (direct_sum(rep, dual_rep(rep)), "1/(2,2,2)"),
        "SymV*": (dual_rep(rep), "1/(2)"),
    }
    for space, (module, default_closed) in spaces.items():
        series = invariant_series(weight_multiset(module), trunc)
        for d in range(min(dmax, trunc) + 1):
            oracle = invariant_dimension(rep, space, d)
            report.add(
                check(
                    f"hilbert.{space}.kernel-oracle.degree-{d}",
                    series[d] == oracle,
                    "P(t) = c_(0)(t) - c_(-2)(t) agrees with direct invariant count",
                    f"series coefficient {series[d]} vs kernel dimension {oracle}",
                    f"{space}: t^{d} coefficient {series[d]} = kernel dimension {oracle}",
                )
            )
        form = closed if closed is not None else (
            parse_closed_form(default_closed) if _is_sl2_adjoint(rep) else None
        )
        if form is not None and (closed is None or space == "P0-full"):
            _merge(report, compare_closed_form(series, *form, label=f"hilbert.{space}"))
    return report


def suite_generators(rep: LieRepData, dmax: int, seed: int) -> VerificationReport:
    tr = build_sl2_triple(rep)
    report = VerificationReport("generators")
    _merge(report, verify_generators_P0(rep, tr, dmax))
    syms = triple_symbols(tr, p0_ring(rep))
    polys = [syms["e"], syms["f"], syms["h"]]
    for s in range(JACOBIAN_SEEDS):
        _merge(report, jacobian_independence(polys, seed=seed + s, label=f"generators.jacobian.seed-{seed + s}"))
    if all(x in rep.v_basis for x in ("e", "f", "h")):
        _merge(report, verify_weight_zero_generator(rep, dmax))
    return report


def run_suite(name: str, rep: LieRepData, args) -> VerificationReport:
    trunc, dmax, kmax, seed = args.trunc, args.dmax, args.kmax, args.seed
    if name == "current-ope":
        return verify_current_ope(build_currents(rep))
    if name == "level":
        return verify_level(build_sl2_triple(rep), rep.v_basis)
    if name == "conformal":
        return verify_conformal(rep)
    if name == "commutant":
        cs = build_currents(rep)
        if args.v:
            return verify_commutant_membership(parse_expr(args.v, rep), cs, label="v")
        report = VerificationReport("commutant")
        for x, v in build_sl2_triple(rep).items():
            report.extend(verify_commutant_membership(v, cs, label=f"v{x}"))
        return report
    if name == "compat":
        return verify_compatibility(rep, kmax=kmax)
    if name == "howe":
        return verify_howe_inclusion(build_currents(rep), build_sl2_triple(rep))
    if name == "generators":
        return suite_generators(rep, dmax, seed)
    if name == "hilbert":
        weights = parse_weights(args.weights) if args.weights is not None else None
        closed = parse_closed_form(args.closed) if args.closed else None
        if weights is not None and closed is None:
            raise UsageError("--weights needs --closed to have something to verify")
        return suite_hilbert(rep, weights, closed, trunc, dmax)
    raise UsageError(f"unknown suite {name!r}")


def cmd_verify(args) -> int:
    rep = _load(args)
    names = [s for s in SUITES if s != "all"] if args.suite == "all" else [args.suite]
    report = VerificationReport(
        args.suite,
        config={"rep": rep.name, "trunc": args.trunc, "dmax": args.dmax, "kmax": args.kmax, "seed": args.seed},
    )
    for name in names:
        _merge(report, run_suite(name, rep, args))
    print(report.render())
    if args.json:
        Path(args.json).write_text(report.to_json(), encoding="utf-8")
    return report.exit_code()


def cmd_ope(args) -> int:
    rep = load_rep_file(args.rep_file) if args.rep_file else builtin_rep(args.rep)
    a = parse_expr(args.a, rep)
    b = parse_expr(args.b, rep)
    products = ope_singular(a, b)
    if not products:
        print("(regular)")
    for n, s in products.items():
        print(f"n={n}: {s.format(rep.v_basis)}")
    return 0


def cmd_hilbert(args) -> int:
    weights = parse_weights(args.weights)
    series = invariant_series(weights, args.trunc)
    print(", ".join(str(c) for c in series.coeffs))
    if args.closed:
        report = compare_closed_form(series, *parse_closed_form(args.closed))
        print(report.render())
        if args.json:
            Path(args.json).write_text(report.to_json(), encoding="utf-8")
        return report.exit_code()
    return 0


def cmd_invariants(args) -> int:
    rep = _load(args)
    for d in range(args.dmax + 1):
        print(f"d={d}: {invariant_dimension(rep, args.space, d)}")
    return 0


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rep", default="sl2-adjoint", help="built-in representation name")
    p.add_argument("--rep-file", help="path to a JSON representation document")
    p.add_argument("--trunc", type=int, default=DEFAULT_TRUNC, help="series truncation order T")
    p.add_argument("--dmax", type=int, default=DEFAULT_DMAX, help="largest polynomial degree checked")
    p.add_argument("--kmax", type=int, default=DEFAULT_KMAX, help="largest derivative index in gr(S(V))")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", help="write the report as JSON to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betagamma", description="Exact beta-gamma system computations for sl(2)-modules."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ope", help="print the singular part of the OPE of two operators")
    p.add_argument("rep", help="built-in representation name")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--rep-file")
    p.set_defaults(func=cmd_ope)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=SUITES)
    _common(p)
    p.add_argument("--v", help="operator expression to test for commutant membership")
    p.add_argument("--weights", help="comma-separated sl(2) weights (hilbert suite)")
    p.add_argument("--closed", help="closed form 'F/(d1,d2,...)' (hilbert suite)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hilbert", help="invariant Hilbert series from sl(2) weights")
    p.add_argument("--weights", required=True)
    p.add_argument("--trunc", type=int, default=DEFAULT_TRUNC)
    p.add_argument("--closed")
    p.add_argument("--json")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("invariants", help="dimensions of invariant polynomials by degree")
    _common(p)
    p.add_argument("--space", choices=SPACES, default="P0-full")
    p.set_defaults(func=cmd_invariants)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ExprError, RepError, UsageError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
