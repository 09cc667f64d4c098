"""Command-line front end.

Subcommands: ``table`` renders the derived multiplication table,
``verify`` runs the named verification suites, ``sample`` draws
elements of the constraint surface as JSON lines, and ``eval`` reports
norms, constraint and quaternion parts of elements read from stdin.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .even_algebra import (
    BARE_LABELS,
    EvenElement,
    SplitResidualError,
    TableEntry,
    _sample_from_rng,
    derive_product_table,
)
from .fields import FLOAT, RATIONAL, format_coefficient
from .verify import SUITES, VerifyConfig, run_all

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


# -- table rendering ------------------------------------------------------


def _cell_text(entry: TableEntry) -> str:
    body = BARE_LABELS[entry.result]
    if entry.orientation_power:
        body = "λ " + body
    return ("-" if entry.sign < 0 else "") + body


def _row_label(index: int) -> str:
    return _cell_text(TableEntry(index, 1, 0 if index == 0 else 1))


def _table_grid(table) -> list[list[str]]:
    header = ["*"] + [_row_label(k) for k in range(8)]
    rows = [header]
    for i, row in enumerate(table):
        rows.append([_row_label(i)] + [_cell_text(entry) for entry in row])
    return rows


def render_table_markdown(table) -> str:
    grid = _table_grid(table)
    lines = ["| " + " | ".join(grid[0]) + " |"]
    lines.append("| " + " | ".join(["---"] * len(grid[0])) + " |")
    for row in grid[1:]:
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines)


def render_table_csv(table) -> str:
    return "\n".join(",".join(row) for row in _table_grid(table))


def render_table_text(table) -> str:
    grid = _table_grid(table)
    widths = [max(len(row[c]) for row in grid) for c in range(len(grid[0]))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in grid
    )


def render_table_json(table, orientation: int) -> str:
    cells = [
        [
            {
                "result": entry.result,
                "sign": entry.sign,
                "orientation_power": entry.orientation_power,
            }
            for entry in row
        ]
        for row in table
    ]
    return json.dumps(
        {"lambda": orientation, "labels": [_row_label(k) for k in range(8)], "cells": cells},
        separators=(",", ":"),
    )


def cmd_table(args) -> int:
    table = derive_product_table(args.orientation)
    if args.format == "markdown":
        print(render_table_markdown(table))
    elif args.format == "csv":
        print(render_table_csv(table))
    elif args.format == "json":
        print(render_table_json(table, args.orientation))
    else:
        print(render_table_text(table))
    return EXIT_OK


# -- verify ---------------------------------------------------------------


def cmd_verify(args) -> int:
    fields = {
        "rational": (RATIONAL,),
        "float": (FLOAT,),
        "both": (RATIONAL, FLOAT),
    }[args.field]
    config = VerifyConfig(
        seed=args.seed, trials=args.trials, fields=fields, tolerance=args.tolerance
    )
    reports = run_all(config, args.suite or None)
    failed = sum(1 for r in reports if not r.passed)
    if args.format == "json":
        for report in reports:
            print(json.dumps(report.to_json_dict(), separators=(",", ":")))
    else:
        name_w = max(len(r.suite) for r in reports)
        print(f"{'suite':<{name_w}}  {'field':<8}  {'trials':>7}  {'fail':>5}  "
              f"{'max residual':>13}  {'time':>8}")
        for r in reports:
            residual = "-" if r.max_residual is None else f"{r.max_residual:.3e}"
            print(
                f"{r.suite:<{name_w}}  {r.field:<8}  {r.trials:>7}  "
                f"{r.failure_count:>5}  {residual:>13}  {r.elapsed:>7.2f}s"
            )
            if r.details and (args.suite or not r.passed):
                for key, value in r.details.items():
                    print(f"  {key}: {json.dumps(value, separators=(', ', ': '))}")
            for failure in r.failures:
                print(f"  counterexample: {json.dumps(failure, separators=(', ', ': '))}")
        print(
            f"{len(reports)} suite runs, "
            f"{failed} failed" + ("" if failed else ", all passed")
        )
    return EXIT_FAILURE if failed else EXIT_OK


# -- sample ---------------------------------------------------------------


def cmd_sample(args) -> int:
    if args.count < 1:
        print("count must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if not args.rho > 0:
        print("rho must be positive", file=sys.stderr)
        return EXIT_USAGE
    rng = random.Random(args.seed)
    for _ in range(args.count):
        element = _sample_from_rng(rng, args.rho, args.orientation)
        print(json.dumps(element.to_json_dict(), separators=(",", ":")))
    return EXIT_OK


# -- eval -----------------------------------------------------------------


def _eval_element(element: EvenElement, tolerance) -> dict:
    view = element.as_dual_quaternion()
    result = {
        "lambda": element.orientation,
        "norm_a": element.scalar_norm(),
        "norm_b": None,
        "residual": None,
        "constraint": format_coefficient(element.constraint()),
        "q_r": [format_coefficient(c) for c in view.real.coeffs],
        "q_d": [format_coefficient(c) for c in view.dual.coeffs],
    }
    tol = tolerance if element.field == FLOAT else 0
    try:
        result["norm_b"] = element.geometric_norm(tol)
    except SplitResidualError as err:
        result["residual"] = {
            "scalar": format_coefficient(err.residual.scalar),
            "eps": format_coefficient(err.residual.eps),
        }
    return result


def _print_eval_text(result: dict) -> None:
    print(f"lambda: {result['lambda']}")
    print(f"norm_a: {result['norm_a']!r}")
    if result["norm_b"] is None:
        residual = result["residual"]
        print(
            "norm_b: undefined "
            f"(quadratic form is {residual['scalar']} + {residual['eps']} eps)"
        )
    else:
        print(f"norm_b: {result['norm_b']!r}")
    print(f"constraint: {result['constraint']}")
    print(f"q_r: [{', '.join(result['q_r'])}]")
    print(f"q_d: [{', '.join(result['q_d'])}]")


def cmd_eval(args) -> int:
    field = RATIONAL if args.field == "rational" else FLOAT
    lines = [line for line in sys.stdin.read().splitlines() if line.strip()]
    if not lines:
        print("no element JSON on stdin", file=sys.stderr)
        return EXIT_USAGE
    results = []
    for lineno, line in enumerate(lines, start=1):
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as err:
            print(
                f"line {lineno}: parse error at position {err.pos}: {err.msg}",
                file=sys.stderr,
            )
            return EXIT_USAGE
        try:
            element = EvenElement.from_json_dict(obj, field)
        except ValueError as err:
            print(f"line {lineno}: {err}", file=sys.stderr)
            return EXIT_USAGE
        results.append(_eval_element(element, args.tolerance))
    for i, result in enumerate(results):
        if args.format == "json":
            print(json.dumps(result, separators=(",", ":")))
        else:
            if i:
                print()
            _print_eval_text(result)
    return EXIT_OK


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evenga",
        description="Even-subalgebra geometric algebra kernel and verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="render the basis multiplication table")
    table.add_argument(
        "--lambda", dest="orientation", type=int, choices=(1, -1), default=1,
        help="orientation sign of the basis (default +1)",
    )
    table.add_argument(
        "--format", choices=("text", "json", "csv", "markdown"), default="text"
    )
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--trials", type=int, default=10000)
    verify.add_argument(
        "--field", choices=("rational", "float", "both"), default="rational"
    )
    verify.add_argument("--tolerance", type=float, default=1e-10)
    verify.add_argument(
        "--suite", action="append", choices=sorted(SUITES),
        help="run only the named suite (repeatable)",
    )
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=cmd_verify)

    sample = sub.add_parser(
        "sample", help="draw constraint-surface elements as JSON lines"
    )
    sample.add_argument("-n", "--count", type=int, default=1)
    sample.add_argument("--rho", type=float, default=1.0, help="total norm of each element")
    sample.add_argument("--seed", type=int, default=0)
    sample.add_argument(
        "--lambda", dest="orientation", type=int, choices=(1, -1), default=1
    )
    sample.set_defaults(func=cmd_sample)

    evaluate = sub.add_parser(
        "eval", help="evaluate norms and constraint of element JSON from stdin"
    )
    evaluate.add_argument(
        "--field", choices=("rational", "float"), default="rational"
    )
    evaluate.add_argument("--tolerance", type=float, default=1e-10)
    evaluate.add_argument("--format", choices=("text", "json"), default="text")
    evaluate.set_defaults(func=cmd_eval)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
