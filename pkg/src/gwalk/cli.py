"""Command-line interface.

Subcommands: gb (direct Buchberger), walk (standard or generic conversion),
fan-svg (two-variable fan rendering), bench (benchmark harness).  Domain
errors exit nonzero with a message; identical inputs produce byte-identical
stdout (pass --no-time to strip the timing column from bench output).
"""

from __future__ import annotations

import argparse
import sys

from .bench import DEFAULT_BENCH_PRIME, format_report_table, run_bench
from .errors import GwalkError
from .fan_svg import fan_svg
from .generic import generic_walk
from .groebner import buchberger
from .ideal_io import load_ideal, resolve_ordering
from .orderings import TermOrdering
from .parse import format_polynomial
from .walk import standard_walk


def _ordering_label(ordering: TermOrdering) -> str:
    if ordering.name in ("lex", "degrevlex", "elim-sigma", "elim-tau"):
        return ordering.name
    if ordering.name == "weight":
        return f"weight {list(ordering.rows[0])} refined"
    return f"matrix {[list(r) for r in ordering.rows]}"


def _print_basis(basis, ordering):
    print("Groebner basis with elements")
    for i, g in enumerate(basis, 1):
        print(f"  {i}: {format_polynomial(g.poly, ordering)}")
    print("with respect to the ordering")
    print(f"  {_ordering_label(ordering)}")


def _cmd_gb(args) -> int:
    ideal, named = load_ideal(args.input)
    ordering = resolve_ordering(args.ordering, ideal.ring.n, named)
    basis = buchberger(ideal, ordering)
    _print_basis(basis, ordering)
    return 0


def _cmd_walk(args) -> int:
    ideal, named = load_ideal(args.input)
    n = ideal.ring.n
    start = resolve_ordering(args.start, n, named)
    target = resolve_ordering(args.target, n, named)
    if args.algorithm == "generic":
        basis, trace = generic_walk(ideal, start, target)
    else:
        basis, trace = standard_walk(ideal, start, target)
    if args.verbosity >= 1:
        print(trace.format_text())
    _print_basis(basis, target)
    return 0


def _cmd_fan_svg(args) -> int:
    ideal, named = load_ideal(args.input)
    n = ideal.ring.n
    start = resolve_ordering(args.start, n, named)
    target = resolve_ordering(args.target, n, named)
    basis, trace = standard_walk(ideal, start, target, keep_bases=True)
    fan_svg(trace, trace.bases, args.svg_out)
    if args.verbosity >= 1:
        print(trace.format_text())
    print(f"wrote {args.svg_out}")
    return 0


def _parse_field(spec: str):
    if spec == "QQ":
        return "QQ"
    if spec.startswith("Fp:") or spec.startswith("Fp="):
        try:
            return int(spec[3:])
        except ValueError:
            raise GwalkError(f"bad prime in field spec {spec!r}") from None
    raise GwalkError(f'field must be "QQ" or "Fp:<prime>", got {spec!r}')


def _cmd_bench(args) -> int:
    systems = [s for s in (args.systems or "").split(",") if s]
    algorithms = [a for a in args.algorithm.split(",") if a]
    reports = run_bench(systems, _parse_field(args.field), algorithms)
    print(format_report_table(reports, show_time=not args.no_time))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gwalk",
        description="Exact Groebner bases and Groebner-walk basis conversion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="ideal file (JSON)")
        p.add_argument("-v", "--verbosity", type=int, default=0)
        p.add_argument("--no-time", action="store_true", help="omit timing output")

    p_gb = sub.add_parser("gb", help="compute a Groebner basis directly")
    common(p_gb)
    p_gb.add_argument("--ordering", default="degrevlex")
    p_gb.set_defaults(func=_cmd_gb)

    p_walk = sub.add_parser("walk", help="convert between orderings via a walk")
    common(p_walk)
    p_walk.add_argument("--start", default="degrevlex")
    p_walk.add_argument("--target", default="lex")
    p_walk.add_argument("--algorithm", choices=("standard", "generic"), default="standard")
    p_walk.set_defaults(func=_cmd_walk)

    p_svg = sub.add_parser("fan-svg", help="render a 2-variable walk trace to SVG")
    common(p_svg)
    p_svg.add_argument("--start", default="degrevlex")
    p_svg.add_argument("--target", default="lex")
    p_svg.add_argument("--svg-out", required=True)
    p_svg.set_defaults(func=_cmd_fan_svg)

    p_bench = sub.add_parser("bench", help="run the benchmark harness")
    common(p_bench, needs_input=False)
    p_bench.add_argument(
        "--systems",
        default="",
        help="comma-separated system names (cyclic5, katsura6, ...) or file paths",
    )
    p_bench.add_argument("--field", default=f"Fp:{DEFAULT_BENCH_PRIME}")
    p_bench.add_argument(
        "--algorithm",
        default="standard",
        help="comma-separated subset of standard,generic,buchberger",
    )
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GwalkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
