"""Command line front end: ``dp1 <subcommand>``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import parse_wpoly
from .chain import verify_canonical_identities
from .claims import verify_paper
from .io import InstanceError, load_instance, read_document
from .maps import (MapError, check_constraints, classify_case, coefficient_constraints,
                   parse_map, transform_fibration)
from .normal_form import Fibration, GeneralSextic, NormalizationError, normalize_sextic
from .singularities.fibers import central_fiber_type, threefold_singularities
from .singularities.report import SMOOTH, SingularityReport
from .singularities.threefold import affine_germ, classify_cDV, is_singular_at

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_TRANSFORM = 2
EXIT_IO = 3


class UsageError(Exception):
    pass


def _emit(args, data, text_lines):
    if args.format == "json":
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print("\n".join(text_lines))


def _fibration_from_args(args):
    """``(Fibration, map or None)`` from --fibration FILE or --equation TEXT."""
    if getattr(args, "fibration", None):
        fib, mp = load_instance(args.fibration)
    elif getattr(args, "equation", None):
        variables = "pqrs" if any(v in args.equation for v in "pqrs") else "xyzw"
        fib, mp = Fibration.from_wpoly(parse_wpoly(args.equation, variables, homogeneous=6),
                                       allow_degenerate=True), None
    else:
        raise UsageError("give --fibration FILE or --equation TEXT")
    if getattr(args, "map", None):
        mp = parse_map(args.map)
    return fib, mp


# -- subcommands -----------------------------------------------------------

def cmd_normalize(args):
    if args.fibration:
        equation = read_document(args.fibration)["fibration"]["equation"]
    elif args.equation:
        equation = args.equation
    else:
        raise UsageError("give --fibration FILE or --equation TEXT")
    sextic = GeneralSextic.from_wpoly(parse_wpoly(equation, homogeneous=6))
    try:
        fib, record = normalize_sextic(sextic)
    except NormalizationError as exc:
        _emit(args, {"ok": False, "error": str(exc)}, [f"normalization failed: {exc}"])
        return EXIT_FAIL
    data = {"ok": True, "normal_form": str(fib), "identity": record.is_identity(),
            "z": str(record.z_image), "w": str(record.w_image), "scale": str(record.scale)}
    _emit(args, data, [f"normal form: {fib}",
                       f"z -> {record.z_image}", f"w -> {record.w_image}", f"scale: {record.scale}"])
    return EXIT_OK


def cmd_transform(args):
    fib, mp = _fibration_from_args(args)
    if mp is None:
        raise UsageError("no map: add --map a,b,c,d or a map entry in the instance file")
    res = transform_fibration(fib, mp)
    data = {"ok": res.ok, "map": {"forward": list(mp.fwd), "inverse": list(mp.inv), "m": mp.m},
            "cleared_valuation": res.cleared_valuation}
    if res.ok:
        data["target"] = str(res.target)
        lines = [f"V: {res.target}", f"cleared t^{res.cleared_valuation}"]
    else:
        data["violations"] = res.violations
        data["gorenstein_failure"] = res.gorenstein_failure
        lines = ["transform leaves the valuation ring:"]
        lines += [f"  {v['monomial']} (from {v['source_monomial']}): valuation {v['valuation']}, "
                  f"source needs >= {v['required_source_valuation']}" for v in res.violations]
        lines += [f"  central fiber of V hits {p}" for p in res.gorenstein_failure]
    _emit(args, data, lines)
    return EXIT_OK if res.ok else EXIT_TRANSFORM


def cmd_classify_map(args):
    mp = parse_map(args.map)
    case = classify_case(mp)
    data = {"map": {"forward": list(mp.fwd), "inverse": list(mp.inv), "m": mp.m},
            "case": case.tag, "k": case.k, "l": case.l, "a": case.a,
            "swapped": case.swapped, "reversed": case.reversed}
    lines = [f"{mp}", f"case {case.tag}" + (f" (k={case.k}, l={case.l})" if case.tag == "D" else "")
             + (" [x<->y]" if case.swapped else "") + (" [inverse]" if case.reversed else "")]
    if case.tag == "D":
        table = coefficient_constraints(case)
        data["constraints"] = [{"coefficient": n, "min_valuation": v} for n, v in table]
        lines += [f"  val {n} >= {v}" for n, v in table]
    if args.fibration or args.equation:
        fib, _ = _fibration_from_args(argparse.Namespace(fibration=args.fibration,
                                                         equation=args.equation, map=None))
        rep = check_constraints(fib, mp)
        data["check"] = {"ok": rep.ok, "violations": rep.violations, "degenerate": rep.degenerate}
        lines.append("constraints hold" if rep.ok else f"violations: {rep.violations}")
    _emit(args, data, lines)
    return EXIT_OK


def _parse_point(text: str):
    """``"x:y:z:w"`` with rational entries -> (chart, chart point, location)."""
    parts = [Fraction(p) for p in text.replace("(", "").replace(")", "").split(":")]
    if len(parts) != 4:
        raise UsageError("a point is x:y:z:w")
    x, y, z, w = parts
    if y:
        chart, s = "y", y
        point = {"x": x / s, "z": z / s ** 2, "w": w / s ** 3}
    elif x:
        chart, s = "x", x
        point = {"y": y / s, "z": z / s ** 2, "w": w / s ** 3}
    else:
        raise UsageError("points with x = y = 0 are not on a normal-form fibration")
    return chart, point


def cmd_singularities(args):
    fib, _ = _fibration_from_args(args)
    reports = []
    if args.point:
        chart, point = _parse_point(args.point)
        names = fib.names
        rename = dict(zip("xyzw", names))
        germ = affine_germ(fib.to_wpoly(), rename[chart], {rename[k]: v for k, v in point.items()})
        loc = {rename[chart]: "1", **{k: str(v) for k, v in germ.base_point.items()}}
        if is_singular_at(germ):
            rep = classify_cDV(germ, args.trials, args.seed)
        else:
            rep = SingularityReport(SMOOTH, mu=0, location=loc, germ=str(germ.poly))
        rep.location = loc
        reports.append(rep)
        cf = None
    else:
        cf = central_fiber_type(fib, blowup_bound=args.blowup_bound)
        reports = threefold_singularities(fib, args.trials, args.seed)
    data = [r.to_dict() for r in reports]
    lines = []
    if cf is not None:
        lines.append(f"central fiber: {cf.kind} ({cf.equation})")
        lines += [f"  {p.label} at {p.location}" for p in cf.points]
        if cf.rationality_violation:
            lines.append("  minimally elliptic point: central fiber not rational")
        data = {"central_fiber": cf.to_dict(), "threefold": data}
    lines.append("total space: smooth" if not reports else "total space singular points:")
    for r in reports:
        lines.append(f"  {r.label} at {r.location}" + (f" {r.flags}" if r.flags else ""))
    _emit(args, data, lines)
    return EXIT_OK


def cmd_chain(args):
    rep = verify_canonical_identities(args.n)
    lines = [f"n = {rep.n}: {'all identities hold' if rep.ok else 'FAILED'}"]
    lines += [f"  [{'ok' if v else 'FAIL'}] {k}" for k, v in rep.checks.items()]
    lines += [f"  {k}: {rep.details[k]}" for k in ("K1", "K2", "K2 - K1", "determinant", "rank")]
    _emit(args, rep.to_dict(), lines)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify_paper(args):
    claim_filter = None if args.claims is None else [c for c in args.claims.split(",") if c]
    rep = verify_paper(claim_filter, seed=args.seed, trials=args.trials, population=args.population)
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.id}: {c.summary}" for c in rep.claims]
    lines.append(f"{len(rep.claims) - len(rep.failures())}/{len(rep.claims)} claims pass")
    _emit(args, rep.to_dict(), lines)
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json", help="JSON output")
    fmt.add_argument("--text", dest="format", action="store_const", const="text", help="text output (default)")
    common.add_argument("--seed", type=int, default=0, help="seed for random sections and instances")
    common.add_argument("--trials", type=int, default=7, help="hyperplane sections per cDV point")
    common.add_argument("--blowup-bound", type=int, default=30, help="blowup budget for plane curves")
    common.set_defaults(format="text")

    def source(p):
        p.add_argument("--fibration", metavar="FILE", help="instance JSON file")
        p.add_argument("--equation", help="sextic given inline")

    parser = argparse.ArgumentParser(prog="dp1", description="Degree-1 del Pezzo fibrations over a DVR.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="reduce a sextic to w^2 + z^3 + z f4 + f6")
    source(p)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("transform", parents=[common], help="apply a monomial map")
    source(p)
    p.add_argument("--map", metavar="a,b,c,d", help="forward exponents")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("classify-map", parents=[common], help="case shape and valuation table of a map")
    p.add_argument("--map", metavar="a,b,c,d", required=True)
    source(p)
    p.set_defaults(func=cmd_classify_map)

    p = sub.add_parser("singularities", parents=[common], help="central fiber and total-space singularities")
    source(p)
    p.add_argument("--point", metavar="x:y:z:w", help="classify one point of the central fiber")
    p.set_defaults(func=cmd_singularities)

    p = sub.add_parser("chain", parents=[common], help="chain lattice identities")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("verify-paper", parents=[common], help="run the claim suite")
    p.add_argument("--claims", metavar="ID,...", help="comma-separated claim ids or prefixes")
    p.add_argument("--population", type=int, default=40, help="random instances per population claim")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InstanceError, OSError) as exc:
        print(f"dp1: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, MapError, ValueError) as exc:
        print(f"dp1: {exc}", file=sys.stderr)
        return EXIT_IO if args.command in ("verify-paper", "transform") else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
