"""Command-line front end: classify tables, run the fast associativity
test, enumerate counting sequences and orders, construct total orders,
render contour plots and Hasse diagrams.

Exit codes: 0 for success (and associative verdicts), 1 for a negative
check verdict, 2 for usage, parse, or precondition errors.  Output is
deterministic: identical input produces byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .assoc import ascii_contour, contour_plot, fast_associativity_test
from .construct import (
    count_ci_orders,
    count_internal_orders,
    count_nondecreasing_orders,
    total_orders_ci,
    total_orders_internal,
    total_orders_nondecreasing,
)
from .counting import SEQUENCES, generate_nondecreasing_orders
from .errors import SemilatError
from .hasse import cover_pairs, dot_hasse, is_smooth
from .kary import format_kary, load_kary, reduce_to_binary
from .orders import load_order, order_from_op
from .tables import (
    degree_sequence,
    format_table,
    is_associative,
    is_idempotent,
    is_internal_op,
    is_preserving,
    is_quasitrivial,
    is_symmetric,
    load_table,
    neutral_element,
    table_to_json,
    zero_element,
)


def _covers_token(order) -> str:
    return " ".join(f"{x}<{y}" for x, y in cover_pairs(order))


def cmd_check(args) -> int:
    table = load_table(args.file)
    flags = {
        "associative": is_associative(table),
        "idempotent": is_idempotent(table),
        "symmetric": is_symmetric(table),
        "monotone": is_preserving(table),
        "quasitrivial": is_quasitrivial(table),
        "smooth": is_smooth(table),
        "internal": is_internal_op(table),
    }
    zero = zero_element(table)
    neutral = neutral_element(table)
    degrees = degree_sequence(table).counts
    applicable = flags["idempotent"] and flags["symmetric"] and flags["monotone"]
    result = fast_associativity_test(table) if applicable else None

    if args.json:
        doc = {
            "n": table.n,
            "properties": flags,
            "zero": zero,
            "neutral": neutral,
            "degrees": list(degrees),
            "fast_test": None,
            "order_covers": None,
        }
        if result is not None:
            doc["fast_test"] = {
                "associative": result.associative,
                "failed_interval": list(result.failed_interval)
                if result.failed_interval
                else None,
            }
            if result.order is not None:
                doc["order_covers"] = [list(p) for p in cover_pairs(result.order)]
        print(json.dumps(doc, indent=2))
    else:
        print(f"n: {table.n}")
        for name, value in flags.items():
            print(f"{name}: {'yes' if value else 'no'}")
        print(f"zero: {zero if zero is not None else 'none'}")
        print(f"neutral: {neutral if neutral is not None else 'none'}")
        print(f"degrees: {' '.join(str(d) for d in degrees)}")
        if result is None:
            print("fast test: skipped (needs idempotent, symmetric, monotone)")
        elif result.associative:
            print("fast test: associative")
            print(f"order: {_covers_token(result.order)}")
        else:
            lo, hi = result.failed_interval
            print(f"fast test: not associative, failing interval [{lo},{hi}]")
    return 0 if flags["associative"] else 1


def cmd_count(args) -> int:
    if args.table:
        upto = args.upto if args.upto is not None else 8
        names = ["alpha", "tau", "beta", "delta"]
        rows = [
            {"n": m, **{name: SEQUENCES[name](m) for name in names}}
            for m in range(upto + 1)
        ]
        if args.json:
            print(json.dumps({"upto": upto, "rows": rows}, indent=2))
        else:
            print("n " + " ".join(names))
            for row in rows:
                print(f"{row['n']} " + " ".join(str(row[name]) for name in names))
        return 0
    if args.seq is None or args.n is None:
        print("count: need --seq and --n, or --table", file=sys.stderr)
        return 2
    value = SEQUENCES[args.seq](args.n)
    if args.json:
        print(json.dumps({"seq": args.seq, "n": args.n, "value": value}))
    else:
        print(value)
    return 0


def cmd_gen(args) -> int:
    for order in generate_nondecreasing_orders(args.n):
        if args.json:
            print(json.dumps({"covers": [list(p) for p in cover_pairs(order)]}))
        else:
            print(_covers_token(order))
    return 0


def cmd_orders(args) -> int:
    order = load_order(args.file)
    streams = {
        "nondecreasing": total_orders_nondecreasing,
        "internal": total_orders_internal,
        "ci": total_orders_ci,
    }
    counts = {
        "nondecreasing": count_nondecreasing_orders,
        "internal": count_internal_orders,
        "ci": count_ci_orders,
    }
    if args.count_only:
        value = counts[args.mode](order)
        print(json.dumps({"mode": args.mode, "count": value}) if args.json else value)
        return 0
    emitted = [t.bottom_to_top() for t in streams[args.mode](order)]
    if args.json:
        print(json.dumps({"mode": args.mode, "orders": [list(t) for t in emitted]}))
    else:
        for chain in emitted:
            print(" ".join(str(x) for x in chain))
    return 0


def cmd_plot(args) -> int:
    table = load_table(args.file)
    if args.dot:
        order = order_from_op(table)
        sys.stdout.write(dot_hasse(order))
    elif args.json:
        plot = contour_plot(table)
        doc = {
            "n": table.n,
            "values": [list(row) for row in table.values],
            "components": [
                {"value": value, "size": len(cells)} for value, cells in plot.levels
            ],
        }
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(ascii_contour(table))
    if args.out:
        from .figures import save_contour_figure

        save_contour_figure(table, args.out)
        print(f"figure written: {args.out}")
    return 0


def cmd_hasse(args) -> int:
    order = load_order(args.file)
    if args.dot:
        sys.stdout.write(dot_hasse(order))
    elif args.json:
        print(json.dumps({"n": order.n, "covers": [list(p) for p in cover_pairs(order)]}))
    else:
        for x, y in cover_pairs(order):
            print(f"{x} {y}")
    if args.out:
        from .figures import save_hasse_figure

        save_hasse_figure(order, args.out)
        print(f"figure written: {args.out}")
    return 0


def cmd_reduce(args) -> int:
    table = load_kary(args.file)
    binary = reduce_to_binary(table)
    if args.json:
        print(table_to_json(binary))
    else:
        sys.stdout.write(format_table(binary))
    return 0


def cmd_extend(args) -> int:
    table = load_table(args.file)
    from .kary import extend

    extended = extend(table, args.k)
    if args.json:
        from .kary import kary_to_json

        print(kary_to_json(extended))
    else:
        sys.stdout.write(format_kary(extended))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semilat",
        description="Finite semilattice operations on chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify a table and run the fast associativity test")
    p.add_argument("--file", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("count", help="exact counting sequences")
    p.add_argument("--seq", choices=sorted(SEQUENCES))
    p.add_argument("--n", type=int)
    p.add_argument("--table", action="store_true", help="print the sequence table")
    p.add_argument("--upto", type=int, help="last n for --table (default 8)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("gen", help="stream the nondecreasing orders on {1..n}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("orders", help="construct total orders from an order file")
    p.add_argument("--file", required=True)
    p.add_argument("--mode", choices=["nondecreasing", "internal", "ci"], required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_orders)

    p = sub.add_parser("plot", help="contour plot of a table (ASCII, DOT, or figure)")
    p.add_argument("--file", required=True)
    p.add_argument("--dot", action="store_true", help="emit the Hasse diagram as DOT")
    p.add_argument("--out", help="also render a figure to this path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("hasse", help="Hasse diagram of an order file")
    p.add_argument("--file", required=True)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--out", help="also render a figure to this path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("reduce", help="reduce a k-ary table to its binary operation")
    p.add_argument("--file", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("extend", help="extend a binary associative table to arity k")
    p.add_argument("--file", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_extend)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except SemilatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
