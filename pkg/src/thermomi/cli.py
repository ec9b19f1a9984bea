"""Command-line frontend: single points, sweeps, the six reference CSVs,
and the random bound explorer.

Exit codes: 0 success, 2 usage error, 3 numerical validation failure,
4 I/O failure, 5 bound violation found by the explorer.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from dataclasses import fields

from .models import XYParams, xy_ground_state
from .sweep import (
    DEFAULT_COUPLING_GRID,
    DEFAULT_TEMPERATURE_GRID,
    Spacing,
    SweepMode,
    SweepRecord,
    SweepSpec,
    evaluate_xy_point,
    explore_bound,
    fig1_suite,
    run_sweep,
    sweep_axis,
)

__all__ = ["CSV_HEADER", "main"]

CSV_HEADER = (
    "beta_inv,g,b1,b2,mutual_info,upper_bound,gap,s_a,s_b,s_ab,"
    "e_total,e_a,e_b,e_int,log_z_a,log_z_b,log_z_ab"
)
_CSV_FIELDS = CSV_HEADER.split(",")
assert _CSV_FIELDS == [f.name for f in fields(SweepRecord)]


def _fmt(x: float) -> str:
    """15 significant digits; the serialization contract for every number."""
    return format(float(x), ".15g")


def _json_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if math.isinf(v):
            return "Infinity" if v > 0 else "-Infinity"
        return _fmt(v)
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    raise TypeError(f"cannot serialize {type(v)!r}")


def _json_object(items, indent: str = "") -> str:
    body = ",\n".join(f'{indent}  "{k}": {_json_value(v)}' for k, v in items)
    return f"{indent}{{\n{body}\n{indent}}}"


def _record_items(rec: SweepRecord):
    return [(name, getattr(rec, name)) for name in _CSV_FIELDS]


def _records_csv(records) -> str:
    lines = [CSV_HEADER]
    lines.extend(",".join(_fmt(getattr(rec, name)) for name in _CSV_FIELDS) for rec in records)
    return "\n".join(lines) + "\n"


def _records_json(records) -> str:
    objs = [_json_object(_record_items(rec), indent="  ") for rec in records]
    return "[\n" + ",\n".join(objs) + "\n]\n"


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _add_field_args(sub, with_g: bool) -> None:
    sub.add_argument("--b1", type=float, required=True, help="field on spin A")
    sub.add_argument("--b2", type=float, required=True, help="field on spin B")
    if with_g:
        sub.add_argument("--g", type=float, required=True, help="XY coupling constant")


def _add_beta_args(sub) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--beta", type=float, help="inverse temperature")
    group.add_argument("--beta-inv", type=float, help="temperature (reciprocal of beta)")


def _add_grid_args(sub, default) -> None:
    lo, hi, points = default
    sub.add_argument("--min", type=float, default=lo, help="axis lower endpoint")
    sub.add_argument("--max", type=float, default=hi, help="axis upper endpoint")
    sub.add_argument("--points", type=int, default=points, help="number of grid points")
    sub.add_argument(
        "--spacing", choices=["linear", "log"], default=None, help="grid spacing"
    )


def _add_output_args(sub, formats=("csv", "json")) -> None:
    sub.add_argument("--out", default=None, help="output path (stdout if omitted)")
    if formats:
        sub.add_argument("--format", choices=list(formats), default=formats[0])


def _resolve_beta(parser, args) -> tuple[float, float]:
    """(beta, beta_inv) from whichever flag was supplied."""
    if args.beta is not None:
        if not math.isfinite(args.beta) or args.beta < 0.0:
            parser.error(f"--beta must be finite and >= 0, got {args.beta}")
        beta = args.beta
        beta_inv = math.inf if beta == 0.0 else 1.0 / beta
    else:
        if not math.isfinite(args.beta_inv) or args.beta_inv <= 0.0:
            parser.error(f"--beta-inv must be finite and > 0, got {args.beta_inv}")
        beta_inv = args.beta_inv
        beta = 1.0 / beta_inv
    return beta, beta_inv


def _parse_dims(parser, text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(\d+)[xX](\d+)", text)
    if not match:
        parser.error(f"--dims must look like 2x3, got {text!r}")
    d_a, d_b = int(match.group(1)), int(match.group(2))
    if d_a < 2 or d_b < 2:
        parser.error(f"--dims components must be >= 2, got {text!r}")
    return d_a, d_b


def _parse_beta_list(parser, text: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        parser.error(f"--beta-list must be comma-separated numbers, got {text!r}")
    if not values:
        parser.error("--beta-list must contain at least one value")
    for b in values:
        if not math.isfinite(b) or b < 0.0:
            parser.error(f"beta values must be finite and >= 0, got {b}")
    return values


def cmd_point(parser, args) -> int:
    beta, beta_inv = _resolve_beta(parser, args)
    params = XYParams(b1=args.b1, b2=args.b2, g=args.g)
    rec = evaluate_xy_point(params, beta, beta_inv=beta_inv)
    if args.format == "csv":
        _write_text(args.out, _records_csv([rec]))
    else:
        items = _record_items(rec)
        items.append(("beta", beta))
        items.append(("ground_state", xy_ground_state(params).classification.value))
        _write_text(args.out, _json_object(items) + "\n")
    return 0


def _cmd_sweep(parser, args, mode: SweepMode) -> int:
    if mode is SweepMode.TEMPERATURE:
        params = XYParams(b1=args.b1, b2=args.b2, g=args.g)
        beta_inv = 1.0
        default_spacing = Spacing.LOG
    else:
        params = XYParams(b1=args.b1, b2=args.b2, g=0.0)
        _, beta_inv = _resolve_beta(parser, args)
        if math.isinf(beta_inv):
            parser.error("a coupling sweep needs a positive temperature")
        default_spacing = Spacing.LINEAR
    spacing = Spacing(args.spacing) if args.spacing else default_spacing
    spec = SweepSpec(
        mode=mode,
        params=params,
        axis_min=args.min,
        axis_max=args.max,
        points=args.points,
        spacing=spacing,
        beta_inv=beta_inv,
    )
    try:
        sweep_axis(spec)  # argument validation only; usage errors exit 2
    except ValueError as exc:
        parser.error(str(exc))
    records = run_sweep(spec)  # numerical failures propagate and exit 3
    render = _records_csv if args.format == "csv" else _records_json
    _write_text(args.out, render(records))
    return 0


def cmd_fig1(parser, args) -> int:
    os.makedirs(args.out, exist_ok=True)
    for label, records in fig1_suite().items():
        path = os.path.join(args.out, f"fig1_{label}.csv")
        _write_text(path, _records_csv(records))
        print(path)
    return 0


def cmd_explore(parser, args) -> int:
    d_a, d_b = _parse_dims(parser, args.dims)
    betas = _parse_beta_list(parser, args.beta_list)
    if args.samples < 1:
        parser.error(f"--samples must be >= 1, got {args.samples}")
    if not math.isfinite(args.scale) or args.scale < 0.0:
        parser.error(f"--scale must be finite and >= 0, got {args.scale}")
    summary = explore_bound(
        d_a=d_a,
        d_b=d_b,
        samples=args.samples,
        beta_list=betas,
        interaction_scale=args.scale,
        seed=args.seed,
    )
    items = [
        ("dims", f"{summary.d_a}x{summary.d_b}"),
        ("samples", summary.samples),
        ("interaction_scale", summary.interaction_scale),
        ("seed", summary.seed),
        ("beta_list", list(summary.beta_list)),
        ("violations", summary.violations),
        ("gap_min", summary.gap_min),
        ("gap_mean", summary.gap_mean),
        ("gap_max", summary.gap_max),
        ("worst_seed", summary.worst_seed),
        ("mi_min", summary.mi_min),
        ("mi_max", summary.mi_max),
    ]
    _write_text(args.out, _json_object(items) + "\n")
    return 5 if summary.violations else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thermomi",
        description=(
            "Thermal states of bipartite quantum systems: mutual information "
            "and its interaction-energy upper bound (all entropies in nats)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    point = sub.add_parser("point", help="evaluate a single XY-model point")
    _add_field_args(point, with_g=True)
    _add_beta_args(point)
    _add_output_args(point, formats=("json", "csv"))
    point.set_defaults(handler=cmd_point)

    temp = sub.add_parser("sweep-temperature", help="sweep beta^-1 at fixed coupling")
    _add_field_args(temp, with_g=True)
    _add_grid_args(temp, DEFAULT_TEMPERATURE_GRID)
    _add_output_args(temp)
    temp.set_defaults(handler=lambda p, a: _cmd_sweep(p, a, SweepMode.TEMPERATURE))

    coup = sub.add_parser("sweep-coupling", help="sweep the coupling at fixed temperature")
    _add_field_args(coup, with_g=False)
    _add_beta_args(coup)
    _add_grid_args(coup, DEFAULT_COUPLING_GRID)
    _add_output_args(coup)
    coup.set_defaults(handler=lambda p, a: _cmd_sweep(p, a, SweepMode.COUPLING))

    fig1 = sub.add_parser("fig1", help="write the six reference sweeps as CSV files")
    fig1.add_argument("--out", default=".", help="output directory")
    fig1.set_defaults(handler=cmd_fig1)

    explore = sub.add_parser("explore", help="stress the bound on random models")
    explore.add_argument("--dims", required=True, help="subsystem dimensions, e.g. 2x3")
    explore.add_argument("--samples", type=int, default=200)
    explore.add_argument("--scale", type=float, default=1.0, help="interaction scale")
    explore.add_argument("--seed", type=int, default=0)
    explore.add_argument(
        "--beta-list",
        "--beta",
        dest="beta_list",
        default="0.1,1,10",
        help="comma-separated inverse temperatures",
    )
    explore.add_argument("--out", default=None, help="output path (stdout if omitted)")
    explore.set_defaults(handler=cmd_explore)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(parser, args)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"numerical validation error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
