"""Command-line entry point wiring all modules together.

Exit codes: 0 success, 1 verification discrepancy, 2 infeasible or invalid
input.  Trees are read from a file argument or standard input so subcommands
compose in pipelines.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import Infeasible, LeafDiamError
from .formulas import (
    lesniak_bound,
    max_diameter,
    max_leaves,
    min_diameter,
    min_leaves,
)
from .oracle import DEFAULT_CAP, build_table, verify_sweep
from .rewire import spiderize
from .stem import is_diametral_by_lemma1
from .tree import TreePath, read_tree, to_dot, write_tree
from .witnesses import (
    max_diameter_tree,
    max_leaf_tree,
    min_diameter_spider,
    min_leaf_spider,
    spider_to_tree,
)

_FORMULA_FNS = {
    "min-leaves": min_leaves,
    "lesniak-bound": lesniak_bound,
    "max-leaves": max_leaves,
    "min-diameter": min_diameter,
    "max-diameter": max_diameter,
}


def _read_input_tree(path: str | None):
    if path and path != "-":
        text = Path(path).read_text()
    else:
        text = sys.stdin.read()
    return read_tree(text)


def _vertex_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated vertex ids, got {text!r}"
        ) from None


def _cmd_formula(args) -> int:
    print(_FORMULA_FNS[args.command](args.a, args.b))
    return 0


def _cmd_witness(args) -> int:
    if args.min_leaves:
        tree = spider_to_tree(min_leaf_spider(*args.min_leaves))
    elif args.min_diameter:
        tree = spider_to_tree(min_diameter_spider(*args.min_diameter))
    elif args.max_leaves:
        tree = max_leaf_tree(*args.max_leaves)
    else:
        tree = max_diameter_tree(*args.max_diameter)
    print(to_dot(tree) if args.dot else write_tree(tree), end="")
    return 0


def _cmd_spiderize(args) -> int:
    tree = _read_input_tree(args.input)
    trace = spiderize(tree)
    out = write_tree(trace.result)
    if args.trace:
        for s in trace.steps:
            out += (
                f"# step u={s.leaf} b={s.big} w={s.w} z={s.z} "
                f"phi={s.potential_before}->{s.potential_after}\n"
            )
    print(out, end="")
    return 0


def _cmd_check_diametral(args) -> int:
    tree = _read_input_tree(args.input)
    verdict = is_diametral_by_lemma1(tree, TreePath(args.path))
    print("true" if verdict else "false")
    return 0


def _cmd_verify(args) -> int:
    report = verify_sweep(args.max_n, cap=args.cap, jobs=args.jobs)
    for n in sorted(report.tables):
        table = report.tables[n]
        bad = [d for d in report.discrepancies if d.n == n]
        status = "ok" if not bad else f"{len(bad)} DISCREPANCIES"
        print(
            f"n={n}: {n ** (n - 2)} trees, "
            f"d keys {sorted(table.by_diameter)}, "
            f"f keys {sorted(table.by_leaves)} -- {status}"
        )
    for d in report.discrepancies:
        print("DISCREPANCY: " + d.describe())
    print(
        f"verified n=2..{report.max_n}: {report.checks} formula checks, "
        f"{len(report.discrepancies)} discrepancies"
    )
    return 0 if report.ok else 1


def _cmd_table(args) -> int:
    table = build_table(args.n, cap=args.cap)
    ds = sorted(table.by_diameter)
    fs = sorted(table.by_leaves)
    if args.csv:
        print("n,d,min_leaves,max_leaves")
        for d in ds:
            mn, mx = table.by_diameter[d]
            print(f"{args.n},{d},{mn},{mx}")
        print("n,f,min_diam,max_diam")
        for f in fs:
            mn, mx = table.by_leaves[f]
            print(f"{args.n},{f},{mn},{mx}")
    else:
        print(f"order n={args.n}: {args.n ** (args.n - 2)} labeled trees")
        print("  d  min_leaves  max_leaves")
        for d in ds:
            mn, mx = table.by_diameter[d]
            print(f"{d:>3}  {mn:>10}  {mx:>10}")
        print("  f  min_diam  max_diam")
        for f in fs:
            mn, mx = table.by_leaves[f]
            print(f"{f:>3}  {mn:>8}  {mx:>8}")
    if args.figure:
        from .plots import render_table_figure

        render_table_figure(table, args.figure)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leafdiam",
        description="Extremal leaf-count/diameter trade-off for trees: "
        "closed forms, witness trees, spider canonicalization, enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, (a, b) in {
        "min-leaves": ("n", "d"),
        "lesniak-bound": ("n", "d"),
        "max-leaves": ("n", "d"),
        "min-diameter": ("n", "f"),
        "max-diameter": ("n", "f"),
    }.items():
        p = sub.add_parser(name, help=f"print the value for order {a}, {b}")
        p.add_argument("a", metavar=a, type=int)
        p.add_argument("b", metavar=b, type=int)
        p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("witness", help="emit a tree attaining an extremal value")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--min-leaves", nargs=2, type=int, metavar=("N", "D"))
    g.add_argument("--min-diameter", nargs=2, type=int, metavar=("N", "F"))
    g.add_argument("--max-leaves", nargs=2, type=int, metavar=("N", "D"))
    g.add_argument("--max-diameter", nargs=2, type=int, metavar=("N", "F"))
    p.add_argument("--dot", action="store_true", help="emit DOT instead of tree text")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("spiderize", help="rewire a tree into a spider")
    p.add_argument("input", nargs="?", help="tree file (default: stdin)")
    p.add_argument("--trace", action="store_true",
                   help="append one comment line per rewiring step")
    p.set_defaults(func=_cmd_spiderize)

    p = sub.add_parser("check-diametral",
                       help="test a path against the depth criterion")
    p.add_argument("--path", required=True, type=_vertex_list,
                   metavar="i,j,k,...", help="vertex ids along the path")
    p.add_argument("input", nargs="?", help="tree file (default: stdin)")
    p.set_defaults(func=_cmd_check_diametral)

    p = sub.add_parser("verify",
                       help="check all formulas against exhaustive enumeration")
    p.add_argument("--max-n", type=int, default=DEFAULT_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="enumeration cap (hard limit 11)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="print one order's extremal table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--csv", action="store_true", help="emit CSV rows")
    p.add_argument("--figure", metavar="PATH",
                   help="also render the table as a figure file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 2
    except LeafDiamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
