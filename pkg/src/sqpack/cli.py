"""Command-line interface.

Exit codes: 0 success (or valid packing), 1 invalid packing from
``verify``, 2 usage/parse errors, 3 refutation precondition violations.
Results go to stdout; error messages go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import anneal, construct, formats, geometry, lattice, sweep, values
from .geometry import PreconditionError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


def decimal_str(value: Fraction, digits: int) -> str:
    """Exact decimal rendering of a rational, rounded to ``digits`` places."""
    scaled = round(value * 10**digits)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}"
    text = str(scaled).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _highlight_indices(p: geometry.Packing) -> list[int]:
    """Squares whose side differs from the most common side (for shading)."""
    counts: dict[Fraction, int] = {}
    for s in p.squares:
        counts[s.side] = counts.get(s.side, 0) + 1
    if len(counts) < 2:
        return []
    modal = max(counts, key=lambda side: (counts[side], side))
    return [i for i, s in enumerate(p.squares) if s.side != modal]


def _cmd_value(args: argparse.Namespace) -> int:
    g = values.g_value(args.n)
    line = formats.format_rational(g)
    if args.decimal is not None:
        line += f"\t{decimal_str(g, args.decimal)}"
    print(line)
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    header = ["n", "k", "c", "g"]
    if args.decimal is not None:
        header.append("decimal")
    print("\t".join(header))
    for n in range(1, args.max + 1):
        d = values.decompose(n)
        g = values.g_value(n)
        row = [str(n), str(d.k), "" if d.c is None else str(d.c),
               formats.format_rational(g)]
        if args.decimal is not None:
            row.append(decimal_str(g, args.decimal))
        print("\t".join(row))
    return EXIT_OK


def _cmd_construct(args: argparse.Namespace) -> int:
    p = construct.construct_optimal(args.n)
    k = values.decompose(args.n).k
    _write_text(args.out, formats.emit_packing(p, k=k))
    if args.svg is not None:
        svg = formats.emit_svg(p, highlight=_highlight_indices(p))
        _write_text(args.svg, svg)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    p = formats.parse_packing(_read_text(args.file))
    report = geometry.validate(p)
    sys.stdout.write(formats.emit_report(report))
    return EXIT_OK if report.is_valid else EXIT_INVALID


def _cmd_certify(args: argparse.Namespace) -> int:
    p = formats.parse_packing(_read_text(args.file))
    if args.a is not None:
        a = formats.parse_rational(args.a, "--a")
    else:
        a = sweep.best_offset(p, args.k)
    transcript = sweep.build_transcript(p, args.k, a)
    sys.stdout.write(formats.emit_transcript(transcript))
    return EXIT_OK


def _cmd_refute(args: argparse.Namespace) -> int:
    p = formats.parse_packing(_read_text(args.file))
    if args.engine == "sweep":
        witness = sweep.refute_sweep(p.squares, args.k)
    else:
        witness = lattice.refute_lattice(p.squares, args.k)
    sys.stdout.write(formats.emit_witness(witness))
    return EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    cfg = anneal.SearchConfig(
        seed=args.seed, iterations=args.iters, restarts=args.restarts
    )
    result = anneal.optimize(args.n, cfg)
    print(f"best_total\t{result.best_total:.9f}")
    if args.rationalize is not None:
        p = anneal.rationalize(result, args.rationalize)
        total = geometry.total_side_length(p)
        print(f"rational_total\t{formats.format_rational(total)}")
        _write_text(args.out, formats.emit_packing(p))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqpack",
        description="Exact optimal axis-parallel square packings in the unit square.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_value = sub.add_parser("value", help="print the optimal total side length g(n)")
    p_value.add_argument("n", type=int)
    p_value.add_argument("--decimal", type=int, metavar="P",
                         help="append a P-digit decimal approximation")
    p_value.set_defaults(func=_cmd_value)

    p_table = sub.add_parser("table", help="print n, k, c, g(n) rows as TSV")
    p_table.add_argument("--max", type=int, required=True, metavar="N")
    p_table.add_argument("--decimal", type=int, metavar="P")
    p_table.set_defaults(func=_cmd_table)

    p_con = sub.add_parser("construct", help="emit an optimal packing of n squares")
    p_con.add_argument("n", type=int)
    p_con.add_argument("--out", metavar="FILE", help="packing document output")
    p_con.add_argument("--svg", metavar="FILE", help="SVG rendering output")
    p_con.set_defaults(func=_cmd_construct)

    p_ver = sub.add_parser("verify", help="validate a packing document")
    p_ver.add_argument("file")
    p_ver.set_defaults(func=_cmd_verify)

    p_cert = sub.add_parser("certify", help="print a sweep-line certificate transcript")
    p_cert.add_argument("file")
    p_cert.add_argument("--k", type=int, required=True)
    p_cert.add_argument("--a", metavar="RAT", help="shift in [0, 1/k); default: best")
    p_cert.set_defaults(func=_cmd_certify)

    p_ref = sub.add_parser("refute", help="produce an overlap witness for an overfull instance")
    p_ref.add_argument("file")
    p_ref.add_argument("--k", type=int, required=True)
    p_ref.add_argument("--engine", choices=("sweep", "lattice"), required=True)
    p_ref.set_defaults(func=_cmd_refute)

    p_search = sub.add_parser("search", help="stochastic lower-bound search")
    p_search.add_argument("n", type=int)
    p_search.add_argument("--seed", type=int, default=0, metavar="S")
    p_search.add_argument("--iters", type=int, default=200_000, metavar="I")
    p_search.add_argument("--restarts", type=int, default=8, metavar="R")
    p_search.add_argument("--rationalize", type=int, metavar="D",
                          help="snap the result to denominator <= D and emit it")
    p_search.add_argument("--out", metavar="FILE",
                          help="where to write the rationalized packing")
    p_search.set_defaults(func=_cmd_search)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
