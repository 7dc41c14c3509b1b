"""Command line interface.

Subcommands::

    hyperpack density --u 7 --v 3 --w 7 --mode two-congruent
    hyperpack table 1 --format csv
    hyperpack scan --mode one-hyperball --max 50 --top 5
    hyperpack plot-data --kind density-vs-p --samples 200

Exit codes: 0 ok, 2 invalid parameters, 3 infeasible configuration,
4 empty scan, 5 internal inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

import numpy as np

from .errors import FeasibilityError, HyperpackError, InvalidParameters
from .orthoscheme import SchlafliParams
from .packing import (
    DensityResult,
    HeightProfile,
    density_noncongruent,
    density_pp,
    evaluate,
    noncongruent_cases,
    optimize_noncongruent,
    scan_integer,
    scan_real_p,
)

DIGITS = 6
# --x given at printed precision may overshoot its case interval by a rounding unit
X_SLACK = 5e-6

TABLE_TRIPLES = {
    1: [
        (7, 3, 7), (7, 3, 8), (7, 3, 9), (7, 3, 50),
        (8, 3, 8), (8, 3, 9), (8, 3, 10), (8, 3, 50),
        (5, 4, 5), (5, 4, 6), (5, 4, 7), (5, 4, 50),
        (4, 5, 4), (4, 5, 5), (4, 5, 6), (4, 5, 50),
    ],
    2: [
        (7, 3, 8), (7, 3, 9), (7, 3, 50),
        (8, 3, 9), (8, 3, 10), (8, 3, 50),
        (5, 4, 5), (5, 4, 6), (5, 4, 7), (5, 4, 50),
        (4, 5, 4), (4, 5, 5), (4, 5, 6), (4, 5, 50),
        (4, 6, 4), (4, 6, 5), (4, 6, 6), (4, 6, 50),
    ],
    3: [
        (7, 3, 7), (7, 3, 8), (7, 3, 9), (7, 3, 50),
        (8, 3, 8), (8, 3, 9), (8, 3, 10), (8, 3, 50),
        (5, 4, 5), (5, 4, 6), (5, 4, 7), (5, 4, 50),
        (4, 5, 4), (4, 5, 5), (4, 5, 6), (4, 5, 50),
        (5, 5, 5),
    ],
}
TABLE_MODES = {1: "two_congruent", 2: "one_hyperball", 3: "non_congruent"}

COLUMNS = {
    "two_congruent": ["u", "v", "w", "mode", "h", "orthoscheme_volume", "piece_volume_sum", "density"],
    "one_hyperball": ["u", "v", "w", "mode", "h0", "h3", "base", "orthoscheme_volume", "piece_volume_sum", "density"],
    "non_congruent": ["u", "v", "w", "mode", "h0", "h3", "x", "case", "orthoscheme_volume", "piece_volume_sum", "density"],
}

CLI_MODES = ("two-congruent", "one-hyperball", "noncongruent", "noncongruent-opt")


def _num(x: float, digits: int = DIGITS) -> float:
    return round(float(x), digits)


def _param(p: float):
    return int(p) if float(p).is_integer() else _num(p)


def to_record(res: DensityResult, digits: int = DIGITS) -> dict:
    """Flatten a result into the output record (the JSON schema's shape)."""
    rec = {
        "u": _param(res.params.u),
        "v": _param(res.params.v),
        "w": _param(res.params.w),
        "mode": res.mode,
    }
    hts = res.heights
    if res.mode == "two_congruent":
        rec["h"] = _num(hts.h, digits)
    elif isinstance(hts, HeightProfile):
        rec["h0"] = _num(hts.h0, digits)
        rec["h3"] = _num(hts.h3, digits)
        rec["base"] = res.base
    else:
        rec["h0"] = _num(hts.h0, digits)
        rec["h3"] = _num(hts.h3, digits)
        rec["x"] = _num(hts.x, digits)
        rec["case"] = hts.case_label
    rec["orthoscheme_volume"] = _num(res.orthoscheme_volume, digits)
    rec["piece_volume_sum"] = _num(res.piece_volume_sum, digits)
    rec["density"] = _num(res.density, digits)
    return rec


def _fmt_cell(val, digits: int = DIGITS) -> str:
    if val is None:
        return ""
    if isinstance(val, float):
        return f"{val:.{digits}f}"
    return str(val)


def render(records: list[dict], fmt: str, columns: Optional[list[str]] = None, single: bool = False) -> str:
    if columns is None:
        columns = list(records[0].keys()) if records else []
    if fmt == "json":
        payload = records[0] if single else records
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for rec in records:
            writer.writerow([_fmt_cell(rec.get(c)) for c in columns])
        return buf.getvalue()
    rows = [[_fmt_cell(rec.get(c)) for c in columns] for rec in records]
    widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(wd) for c, wd in zip(columns, widths))]
    lines.append("  ".join("-" * wd for wd in widths))
    lines += ["  ".join(cell.rjust(wd) for cell, wd in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def resolve_threads(flag: Optional[int]) -> int:
    env = os.environ.get("HYPERPACK_THREADS")
    if env:
        return max(1, int(env))
    if flag:
        return max(1, flag)
    return os.cpu_count() or 1


def _table_row(args):
    mode, triple = args
    return evaluate(mode, SchlafliParams(*triple))


def table_results(name: int, threads: int = 1) -> list[DensityResult]:
    mode = TABLE_MODES[name]
    jobs = [(mode, t) for t in TABLE_TRIPLES[name]]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_table_row, jobs))
    return [_table_row(j) for j in jobs]


def _pick_case(params: SchlafliParams, x: float, label: Optional[str]):
    cases = noncongruent_cases(params)
    if label is not None:
        cases = [c for c in cases if c.label == label]
        if not cases:
            raise FeasibilityError(f"case {label} does not apply to {params.label()}", constraint="case")
    for c in cases:
        if c.x_lo - X_SLACK <= x <= c.x_hi + X_SLACK:
            return c, min(max(x, c.x_lo), c.x_hi)
    spans = ", ".join(f"{c.label}: [{c.x_lo:.6f}, {c.x_hi:.6f}]" for c in cases)
    raise FeasibilityError(f"x={x} is outside every blow-up interval ({spans})", constraint="x-interval")


def cmd_density(args) -> str:
    params = SchlafliParams(args.u, args.v, args.w)
    mode = args.mode
    if mode == "noncongruent":
        if args.x is None:
            raise InvalidParameters("--x is required for --mode noncongruent")
        case, x = _pick_case(params, args.x, args.case)
        res = density_noncongruent(params, case.config(x))
    elif mode == "noncongruent-opt":
        res = optimize_noncongruent(params, tol=args.tol)
    else:
        res = evaluate(mode, params)
    rec = to_record(res)
    return render([rec], args.format, COLUMNS[res.mode], single=True)


def cmd_table(args) -> str:
    res = table_results(args.name, resolve_threads(args.threads))
    mode = TABLE_MODES[args.name]
    return render([to_record(r) for r in res], args.format, COLUMNS[mode])


def cmd_scan(args) -> str:
    rng = range(args.min, args.max + 1)
    v_rng = range(args.min, (args.v_max or args.max) + 1)
    res = scan_integer(args.mode, rng, v_rng, rng, workers=resolve_threads(args.threads))
    top = res[: args.top] if args.top else res
    mode = top[0].mode
    return render([to_record(r) for r in top], args.format, COLUMNS[mode])


def cmd_plot_data(args) -> str:
    if args.samples < 2:
        raise InvalidParameters("--samples must be at least 2")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if args.kind == "density-vs-p":
        ps = np.linspace(args.p_lo, args.p_hi, args.samples)
        writer.writerow(["p", "density"])
        for p in ps:
            writer.writerow([f"{p:.{DIGITS}f}", f"{density_pp(float(p)):.{DIGITS}f}"])
        return buf.getvalue()
    if None in (args.u, args.v, args.w):
        raise InvalidParameters("density-vs-x needs --u, --v and --w")
    params = SchlafliParams(args.u, args.v, args.w)
    label = args.case or optimize_noncongruent(params, tol=args.tol).case_label
    case = next((c for c in noncongruent_cases(params) if c.label == label), None)
    if case is None:
        raise FeasibilityError(f"case {label} does not apply to {params.label()}", constraint="case")
    writer.writerow(["x", "density"])
    for x in np.linspace(case.x_lo, case.x_hi, args.samples):
        d = density_noncongruent(params, case.config(float(x))).density
        writer.writerow([f"{x:.{DIGITS}f}", f"{d:.{DIGITS}f}"])
    return buf.getvalue()


def cmd_optimize_p(args) -> str:
    p_opt, dens = scan_real_p(args.p_lo, args.p_hi, args.tol)
    res = evaluate("two_congruent", SchlafliParams(p_opt, 3.0, p_opt))
    rec = to_record(res)
    return render([rec], args.format, COLUMNS["two_congruent"], single=True)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("pretty", "csv", "json"), default="pretty")
    common.add_argument("--tol", type=float, default=1e-10, help="optimizer x-tolerance")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default: all cores)")

    parser = argparse.ArgumentParser(prog="hyperpack", description="Hyperball packing densities in doubly truncated orthoschemes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("density", parents=[common], help="density of a single {u,v,w}")
    p.add_argument("--u", type=float, required=True)
    p.add_argument("--v", type=float, required=True)
    p.add_argument("--w", type=float, required=True)
    p.add_argument("--mode", choices=CLI_MODES, default="two-congruent")
    p.add_argument("--x", type=float, default=None, help="blow-up parameter (mode noncongruent)")
    p.add_argument("--case", choices=("1a", "1b", "2a", "2b"), default=None)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("table", parents=[common], help="recompute the rows of table 1, 2 or 3")
    p.add_argument("name", type=int, choices=(1, 2, 3))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scan", parents=[common], help="exhaustive integer scan, densest first")
    p.add_argument("--mode", choices=CLI_MODES, required=True)
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, default=50)
    p.add_argument("--v-max", type=int, default=None, help="separate upper bound for v")
    p.add_argument("--top", type=int, default=10)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("plot-data", parents=[common], help="two-column CSV for plotting")
    p.add_argument("--kind", choices=("density-vs-x", "density-vs-p"), required=True)
    p.add_argument("--u", type=float)
    p.add_argument("--v", type=float)
    p.add_argument("--w", type=float)
    p.add_argument("--case", choices=("1a", "1b", "2a", "2b"), default=None)
    p.add_argument("--p-lo", type=float, default=6.001)
    p.add_argument("--p-hi", type=float, default=6.999)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=cmd_plot_data)

    p = sub.add_parser("optimize-p", parents=[common], help="densest {p,3,p} for real p in (6,7)")
    p.add_argument("--p-lo", type=float, default=6.001)
    p.add_argument("--p-hi", type=float, default=6.999)
    p.set_defaults(func=cmd_optimize_p)
    return parser


def _fail(err: HyperpackError) -> int:
    obj = {"code": err.exit_code, "name": type(err).__name__, "message": str(err)}
    sys.stderr.write(json.dumps(obj) + "\n")
    return err.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except HyperpackError as err:
        return _fail(err)
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
