"""Command-line frontend.

Every subcommand prints JSON on stdout (``--pretty`` gives a plain table).
Exit codes: 0 pass, 1 identity failure, 2 input error, 3 oracle inconclusive.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import generators
from .arrangement import (
    ArrangementError,
    betti_numbers,
    char_poly,
    is_essential,
    poincare_affine,
    poincare_projective,
)
from .core.poly import PolySyntaxError, parse_poly
from .formats import InputError, parse_affine_file, parse_arrangement_file
from .gradflow import GradientOracleError, grad_fiber_count
from .milnor import milnor_report
from .regions import ScaleError, enumerate_regions, generic_decone, zaslavsky_counts
from .topology import grad_degree_arrangement, invariants_report, section_degrees
from .verify import run_verify

SEED_ENV = "POLARDEG_SEED"

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


def _default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    raise TypeError(type(obj).__name__)


def _emit(payload, pretty: bool) -> None:
    if not pretty:
        print(json.dumps(payload, default=_default, sort_keys=False))
        return
    _print_table(payload)


def _print_table(payload, indent: int = 0) -> None:
    pad = "  " * indent
    if isinstance(payload, dict):
        width = max((len(str(k)) for k in payload), default=0)
        for k, v in payload.items():
            nested = v.values() if isinstance(v, dict) else v if isinstance(v, list) else ()
            if any(isinstance(x, (dict, list)) for x in nested):
                print(f"{pad}{k}:")
                _print_table(v, indent + 1)
            else:
                print(f"{pad}{str(k).ljust(width)}  {json.dumps(v, default=_default)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, dict):
                print(pad + "  ".join(f"{k}={json.dumps(v, default=_default)}" for k, v in item.items()))
            else:
                print(pad + json.dumps(item, default=_default))
    else:
        print(pad + str(payload))


def _load(args):
    if getattr(args, "gen", None):
        return generators.from_spec(args.gen, args.seed)
    if not getattr(args, "file", None):
        raise InputError("give an arrangement file or --gen")
    return parse_arrangement_file(args.file)


def cmd_lattice(args):
    A = _load(args)
    L = A.lattice
    flats = [
        {"rank": f.rank, "members": sorted(i + 1 for i in f.members), "mobius": m}
        for f, m in zip(L.flats, L.mobius)
    ]
    return {
        "n": A.n,
        "d": A.d,
        "essential": is_essential(A),
        "rank_profile": list(L.rank_profile()),
        "char_poly": list(char_poly(L).coeffs),
        "poincare_affine": poincare_affine(L),
        "poincare_projective": poincare_projective(L),
        "flats": flats,
    }, EXIT_OK


def cmd_invariants(args):
    A = _load(args)
    return invariants_report(A), EXIT_OK


def cmd_grad_degree(args):
    if args.poly:
        if args.oracle != "homotopy":
            raise InputError("--poly requires --oracle homotopy")
        h = parse_poly(args.poly)
        A = None
    else:
        A = _load(args)
        h = None
    if args.oracle == "combinatorial":
        return {"oracle": "combinatorial", "grad_degree": grad_degree_arrangement(A)}, EXIT_OK
    if args.oracle == "regions":
        z = zaslavsky_counts(generic_decone(A, args.seed))
        return {"oracle": "regions", "grad_degree": z.bounded, "essential": z.essential}, EXIT_OK
    h = h if h is not None else A.polynomial()
    res = grad_fiber_count(h, args.seed, verbose=args.verbose)
    out = {"oracle": "homotopy", "grad_degree": res.distinct_solutions, **res.to_json(args.verbose)}
    return out, EXIT_OK if res.distinct_solutions is not None else EXIT_INCONCLUSIVE


def cmd_sections(args):
    A = _load(args)
    degrees = section_degrees(A)
    rows = [
        {"codim": i, "grad_degree": deg, "sign": (-1) ** (A.n - i), "term": (-1) ** (A.n - i) * deg}
        for i, deg in enumerate(degrees)
    ]
    total = sum(r["term"] for r in rows)
    chi = sum((-1) ** k * b for k, b in enumerate(betti_numbers(A)))
    return {"sections": rows, "sum": total, "chi": chi}, EXIT_OK if total == chi else EXIT_FAIL


def cmd_milnor(args):
    A = _load(args)
    return milnor_report(A, args.e).to_json(), EXIT_OK


def cmd_regions(args):
    if args.gen:
        affine = generic_decone(generators.from_spec(args.gen, args.seed), args.seed)
    elif args.file:
        affine = parse_affine_file(args.file)
    else:
        raise InputError("give an affine arrangement file or --gen")
    report = enumerate_regions(affine)
    z = zaslavsky_counts(affine)
    out = report.to_json(with_signs=args.verbose)
    out["zaslavsky"] = {"regions": z.regions, "bounded": z.bounded, "essential": z.essential}
    agree = (report.regions, report.bounded) == (z.regions, z.bounded)
    return out, EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args):
    A = _load(args)
    report = run_verify(A, args.seed, all_oracles=args.all_oracles)
    return report.to_json(), report.exit_code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=int(os.environ.get(SEED_ENV, "0")))
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="JSON output (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="plain-text table")
    common.add_argument("--verbose", action="store_true")
    common.set_defaults(pretty=False)

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("file", nargs="?", help="arrangement file ('n d' header, d rows)")
    source.add_argument("--gen", help="boolean:<n>, generic-lines:<d>, generic:<n>:<d>, braid:<k>, braid-cone:<k>, random:<n>:<d>")

    parser = argparse.ArgumentParser(prog="polardeg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", parents=[common, source], help="intersection lattice and Möbius data")
    p.set_defaults(func=cmd_lattice)
    p = sub.add_parser("invariants", parents=[common, source], help="Betti numbers, chi, gradient degree")
    p.set_defaults(func=cmd_invariants)
    p = sub.add_parser("grad-degree", parents=[common, source], help="degree of the gradient map")
    p.add_argument("--oracle", choices=["combinatorial", "regions", "homotopy"], default="combinatorial")
    p.add_argument("--poly", help='homogeneous polynomial, e.g. "x0^3 + x1^3 + x2^3"')
    p.set_defaults(func=cmd_grad_degree)
    p = sub.add_parser("sections", parents=[common, source], help="generic-section alternating sum table")
    p.set_defaults(func=cmd_sections)
    p = sub.add_parser("milnor", parents=[common, source], help="Milnor fiber report for degree-e f")
    p.add_argument("--e", type=int, required=True)
    p.set_defaults(func=cmd_milnor)
    p = sub.add_parser("regions", parents=[common, source], help="regions of a real affine arrangement")
    p.set_defaults(func=cmd_regions)
    p = sub.add_parser("verify", parents=[common, source], help="run every identity check")
    p.add_argument("--all-oracles", action="store_true", help="run the homotopy oracle beyond n <= 2, d <= 6")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.func(args)
    except (InputError, ArrangementError, PolySyntaxError, ScaleError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GradientOracleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    _emit(payload, args.pretty)
    return code


if __name__ == "__main__":
    sys.exit(main())
