"""Command-line front end.

    multiwright eval   --three A,B,N --z Z
    multiwright eval   --multi alphas=A1,A2,A3 nus=N1,N2 --z Z
    multiwright table  --three A,B,N --range XMIN,XMAX,POINTS [--power P]
    multiwright figure --panel {a,b,c,d} [--range 0,3,121]
    multiwright verify [--suite NAME ...] [--seed S] [--format json|csv]

Exit codes: 0 success, 1 non-convergence or a failed check, 2 bad command
line, 3 parameter outside the domain of the function.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from .figure import PANELS, figure_panel, format_csv
from .series import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOLERANCE,
    MultiIndexParams,
    ThreeParams,
    eval_multi_index,
)
from .verify import DEFAULT_SEED, SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _three(text: str) -> tuple[float, float, float]:
    vals = _floats(text)
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"--three takes alpha,beta,nu; got {text!r}")
    return vals


def _keyed(text: str) -> tuple[str, tuple[float, ...]]:
    key, sep, rest = text.partition("=")
    if not sep or key not in ("alphas", "nus"):
        raise argparse.ArgumentTypeError(f"expected alphas=... or nus=..., got {text!r}")
    return key, _floats(rest)


def _range(text: str) -> tuple[float, float, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"--range takes xmin,xmax,points; got {text!r}")
    try:
        x_min, x_max, pts = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad --range {text!r}") from None
    if pts < 2 or not x_min < x_max:
        raise argparse.ArgumentTypeError("--range needs xmin < xmax and points >= 2")
    return x_min, x_max, pts


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError("--tolerance must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multiwright", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--three", type=_three, metavar="A,B,N", help="alpha,beta,nu")
        g.add_argument("--multi", type=_keyed, nargs=2, metavar="KEY=LIST",
                       help="alphas=a1,...,a_{n+1} nus=n1,...,n_n")
        p.add_argument("--tolerance", type=_positive, default=DEFAULT_TOLERANCE)
        p.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS)

    ev = sub.add_parser("eval", help="evaluate the series at one argument")
    add_params(ev)
    ev.add_argument("--z", type=float, required=True)

    tb = sub.add_parser("table", help="tabulate on a grid as CSV")
    add_params(tb)
    tb.add_argument("--range", type=_range, default=(0.0, 1.0, 11), metavar="XMIN,XMAX,POINTS")
    tb.add_argument("--power", type=float, default=1.0,
                    help="evaluate at z = x**power (use beta for the x^beta convention)")
    tb.add_argument("--output", type=Path)
    tb.add_argument("--format", choices=("csv", "json"), default="csv")

    fg = sub.add_parser("figure", help="CSV data for one plot panel")
    fg.add_argument("--panel", choices=sorted(PANELS), required=True)
    fg.add_argument("--range", type=_range, default=(0.0, 3.0, 121), metavar="XMIN,XMAX,POINTS")
    fg.add_argument("--output", type=Path)
    fg.add_argument("--format", choices=("csv", "json"), default="csv")

    vf = sub.add_parser("verify", help="run the verification suites")
    vf.add_argument("--suite", action="append", choices=sorted(SUITES),
                    help="repeatable; default is every suite")
    vf.add_argument("--seed", type=int, default=DEFAULT_SEED)
    vf.add_argument("--output", type=Path)
    vf.add_argument("--format", choices=("csv", "json"), default="json")
    return parser


def _params(args):
    if args.three is not None:
        return ThreeParams(*args.three).to_multi()
    given = dict(args.multi)
    if set(given) != {"alphas", "nus"}:
        raise argparse.ArgumentTypeError("--multi needs both alphas=... and nus=...")
    return MultiIndexParams(given["alphas"], given["nus"])


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_bytes(text.encode("utf-8"))


def _table_json(header, rows) -> str:
    return json.dumps([dict(zip(header, map(float, r))) for r in rows], indent=2) + "\n"


def cmd_eval(args) -> int:
    sv = eval_multi_index(_params(args), args.z, args.tolerance, args.max_terms)
    print(repr(sv.value))
    print(f"terms_used={sv.terms_used}")
    print(f"converged={sv.converged}")
    return EXIT_OK if sv.converged else EXIT_FAIL


def cmd_table(args) -> int:
    params = _params(args)
    x_min, x_max, pts = args.range
    if x_min < 0 and args.power != int(args.power):
        raise ValueError(f"x = {x_min} < 0 with non-integer power {args.power}")
    status = EXIT_OK
    rows = []
    for x in np.linspace(x_min, x_max, pts):
        sv = eval_multi_index(params, float(x) ** args.power, args.tolerance, args.max_terms)
        status = status if sv.converged else EXIT_FAIL
        rows.append((x, sv.value, sv.terms_used, float(sv.converged)))
    header = ["x", "value", "terms_used", "converged"]
    text = format_csv(header, rows) if args.format == "csv" else _table_json(header, rows)
    _emit(text, args.output)
    return status


def cmd_figure(args) -> int:
    header, data = figure_panel(args.panel, *args.range)
    text = format_csv(header, data) if args.format == "csv" else _table_json(header, data)
    _emit(text, args.output)
    return EXIT_OK


def _records_csv(records) -> str:
    buf = io.StringIO()
    cols = ["id", "suite", "status", "max_abs_residual", "max_rel_residual",
            "tolerance", "criterion", "seed", "params", "grid"]
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in records:
        row = dict(r, params=json.dumps(r["params"], sort_keys=True), grid=json.dumps(r["grid"]))
        w.writerow([format(row[c], ".17g") if isinstance(row[c], float) else row[c] for c in cols])
    return buf.getvalue()


def cmd_verify(args) -> int:
    records = run_suites(args.suite, seed=args.seed)
    if args.format == "json":
        text = json.dumps(records, indent=2) + "\n"
    else:
        text = _records_csv(records)
    _emit(text, args.output)
    failed = [r for r in records if r["status"] == "fail"]
    errata = sum(r["status"] == "erratum-candidate" for r in records)
    print(f"{len(records)} checks, {len(failed)} failed, {errata} erratum-candidate "
          f"(seed {args.seed})", file=sys.stderr)
    for r in failed:
        print(f"FAIL {r['id']}: {r['max_abs_residual']:.3e} > {r['tolerance']:.0e}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"eval": cmd_eval, "table": cmd_table, "figure": cmd_figure, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
