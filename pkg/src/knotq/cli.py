"""Command line front end.

Exit codes: 0 success, 2 unparsable input, 3 enumeration cap exceeded,
4 axiom failure in a computed quandle, 5 reproduced table disagrees with the
published values.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import enumerator, links, published
from .enumerator import CapExceeded, enumerate_quandle, to_dot
from .presentation import PresentationError
from .quandle import AxiomViolation, from_cayley
from .report import analyze, check_row, format_report, to_text, to_tsv

EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_AXIOM = 4
EXIT_MISMATCH = 5


def _q_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <a>..<b>, got {text!r}") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _presentation(args):
    if args.fundamental:
        n = None
    elif args.n is not None:
        n = args.n
    else:
        n = None if args.spec.startswith("file:") else 2
    p = links.parse_link_spec(args.spec, n)
    if args.fundamental:
        p = p.with_n(None)
    return p


def cmd_enumerate(args) -> int:
    t = enumerate_quandle(_presentation(args), args.cap)
    from_cayley(t)  # raises AxiomViolation on a bad table
    if args.dot:
        Path(args.dot).write_text(to_dot(t, loops=args.loops), encoding="utf-8")
    if args.json:
        Path(args.json).write_text(t.to_json() + "\n", encoding="utf-8")
    print(f"elements: {t.size}, components: {len(t.components())}")
    return 0


def cmd_analyze(args) -> int:
    a = analyze(_presentation(args), args.cap)
    if args.json:
        Path(args.json).write_text(a.quandle.to_json() + "\n", encoding="utf-8")
    if args.dot:
        Path(args.dot).write_text(to_dot(a.cayley, loops=args.loops), encoding="utf-8")
    sys.stdout.write(format_report(a))
    return 0


def cmd_reproduce(args) -> int:
    tables = ["2", "4", "5"] if args.table == "all" else [args.table]
    rows = []
    for table in tables:
        rows += [check_row(e, args.cap) for e in published.table_rows(table, args.q)]
    sys.stdout.write(to_text(rows))
    if args.tsv == "-":
        sys.stdout.write("\n" + to_tsv(rows))
    elif args.tsv:
        Path(args.tsv).write_text(to_tsv(rows), encoding="utf-8")
    problems = [m for row in rows for m in row.mismatches]
    if problems:
        sys.stderr.write("mismatches against published values:\n")
        sys.stderr.write("".join(f"  {m}\n" for m in problems))
        return EXIT_MISMATCH
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotq", description="Finite n-quandles of links.")
    sub = parser.add_subparsers(dest="command", required=True)

    def link_args(p):
        p.add_argument("spec", help="link spec, e.g. two-bridge:3/5, torus:2,4:+-, braid-axis:3:1 2 1 2")
        p.add_argument("--n", type=int, default=None, help="quandle exponent (default 2)")
        p.add_argument("--fundamental", action="store_true", help="enumerate the fundamental quandle")
        p.add_argument("--cap", type=_positive, default=None,
                       help=f"vertex cap (default $KNOTQ_CAP or {enumerator.DEFAULT_CAP})")
        p.add_argument("--dot", help="write the Cayley graph as Graphviz")
        p.add_argument("--json", help="write JSON output")
        p.add_argument("--loops", action="store_true", help="draw A1 self-loops in DOT output")

    link_args(sub.add_parser("enumerate", help="enumerate a quandle and print its size"))
    link_args(sub.add_parser("analyze", help="order, components and Aut/Inn/Trans"))

    rp = sub.add_parser("reproduce-tables", help="recompute the published tables")
    rp.add_argument("table", choices=["2", "4", "5", "all"])
    rp.add_argument("--q", type=_q_range, default=None, help="q range for parametrized rows, e.g. 3..15")
    rp.add_argument("--cap", type=_positive, default=None)
    rp.add_argument("--tsv", help="write TSV to this path ('-' for stdout)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"enumerate": cmd_enumerate, "analyze": cmd_analyze,
               "reproduce-tables": cmd_reproduce}[args.command]
    try:
        return handler(args)
    except CapExceeded as exc:
        print(f"CapExceeded: {exc} ({exc.vertices} vertices allocated); "
              "the quandle is probably infinite", file=sys.stderr)
        return EXIT_CAP
    except AxiomViolation as exc:
        print(f"axiom failure: {exc}", file=sys.stderr)
        return EXIT_AXIOM
    except (PresentationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
