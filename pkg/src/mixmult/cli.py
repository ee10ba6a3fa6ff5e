"""Command line entry point ``mixmult``.

Exit codes: 0 success, 1 a check failed, 2 usage or scenario error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import MixMultError, ScenarioError
from .hilbert import GridSpec, default_module_grid, graded_mixed_multiplicities, hilbert_polynomial
from .ideal_mixed import IdealSystem, default_ideal_grid, ideal_mixed_multiplicities, q_dimension, values_json
from .scenario import load_scenario, run_scenario
from .verify import brute_force_length


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", help="scenario JSON file with the declarations")
    p.add_argument("--grid-base", type=int, help="grid base on every axis")
    p.add_argument("--grid-width", type=int, help="grid width on every axis")
    p.add_argument("--retries", type=int, default=4, help="grid enlargements before giving up")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-timing", action="store_true", help="omit timings (reproducible output)")


def _grid(args, default: GridSpec) -> GridSpec:
    base = default.base if args.grid_base is None else (args.grid_base,) * default.arity
    width = default.width if args.grid_width is None else args.grid_width
    return GridSpec(base, width, default.validation_offset)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixmult", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert polynomial of a declared module")
    _common(p)
    p.add_argument("--module", required=True)

    p = sub.add_parser("mixed", help="mixed multiplicities e(M;k) of a declared module")
    _common(p)
    p.add_argument("--module", required=True)

    p = sub.add_parser("ideal-mixed", help="mixed multiplicities e(J^[k0+1], I^[k]; N)")
    _common(p)
    p.add_argument("--J", required=True, dest="J")
    p.add_argument("--ideals", nargs="+", required=True)
    p.add_argument("--module")

    p = sub.add_parser("rank", help="rank of a module, or rank_A B of an extension")
    _common(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--module")
    g.add_argument("--extension")

    p = sub.add_parser("verify", help="run every check of a scenario file")
    _common(p)

    p = sub.add_parser("oracle", help="brute-force oracles")
    osub = p.add_subparsers(dest="oracle", required=True)
    q = osub.add_parser("length", help="length((L1 N + K) / (L2 N + K)) by raw enumeration")
    _common(q)
    q.add_argument("--L1", required=True, dest="L1")
    q.add_argument("--L2", required=True, dest="L2")
    q.add_argument("--module")
    return parser


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            sc = load_scenario(args.file)
            default = None
            if args.grid_base is not None or args.grid_width is not None:
                raise ScenarioError("--grid-base/--grid-width apply to single computations, not verify")
            report = run_scenario(sc, default, args.retries)
            timing = not args.no_timing
            if args.format == "json":
                print(report.dumps(timing))
            else:
                print(report.to_text(timing))
            return 0 if report.passed else 1

        sc = load_scenario(args.file)
        if args.command in ("hilbert", "mixed"):
            M = sc.module(args.module)
            grid = _grid(args, default_module_grid(M))
            if args.command == "hilbert":
                p = hilbert_polynomial(M, grid, args.retries)
                _emit(args, p.to_json(), str(p))
            else:
                mm = graded_mixed_multiplicities(M, grid, args.retries)
                payload = {"degree": mm.total_degree, "values": values_json(mm.values)}
                _emit(args, payload, "\n".join(f"e{k} = {v}" for k, v in sorted(mm.values.items(), reverse=True)))
        elif args.command == "ideal-mixed":
            sys_ = IdealSystem(sc.ideal(args.J), tuple(sc.ideal(r) for r in args.ideals),
                               sc.module(args.module))
            grid = _grid(args, default_ideal_grid(sys_, q_dimension(sys_)))
            mm = ideal_mixed_multiplicities(sys_, grid, args.retries)
            payload = {"q": mm.q, "values": values_json(mm.values), "polynomial": mm.polynomial.to_json()}
            text = "\n".join([f"q = {mm.q}", f"P = {mm.polynomial}"] +
                             [f"e(J^[{k[0] + 1}], I^{list(k[1:])}) = {v}"
                              for k, v in sorted(mm.values.items(), reverse=True)])
            _emit(args, payload, text)
        elif args.command == "rank":
            if args.extension:
                r = sc.extension(args.extension).rank_over_base()
            else:
                r = sc.module(args.module).rank()
            _emit(args, {"rank": r}, str(r))
        elif args.command == "oracle":
            n = brute_force_length(sc.ideal(args.L1), sc.ideal(args.L2), sc.module(args.module),
                                   sc.ring.variable_count)
            _emit(args, {"length": n}, str(n))
    except ScenarioError as exc:
        print(f"mixmult: {exc}", file=sys.stderr)
        return 2
    except MixMultError as exc:
        print(f"mixmult: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
