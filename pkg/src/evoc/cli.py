"""Command-line entry point: ``evoc run|sweep|fitness-table|plot``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import (RUN_KEYS, SWEEP_KEYS, ConfigError, parse_config, provenance_header,
                     read_config_file, run_config_items, sweep_config_items)
from .engine import run
from .experiments import sweep
from .fitness import FitnessWeights, enumerate_fitness_table
from .output import fitness_table_csv, read_table, series_csv, sweep_csv
from .plot import METRICS, series_svg, sweep_svg


def _add_keys(p: argparse.ArgumentParser, keys) -> None:
    g = p.add_argument_group("config overrides (take precedence over --config)")
    for key in keys:
        g.add_argument(f"--{key.replace('_', '-')}", dest=key, metavar="V", default=None)


def _write(path: str, text: str) -> None:
    Path(path).write_text(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="evoc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="simulate one run and write its time series")
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--out", required=True, help="time-series CSV path")
    p.add_argument("--plot", help="optional SVG of the time series")
    p.add_argument("--metric", choices=sorted(METRICS), default="fitness")
    _add_keys(p, RUN_KEYS)

    p = sub.add_parser("sweep", help="creator-fraction x invent-rate sweep")
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--out", required=True, help="sweep CSV path")
    p.add_argument("--plot", help="optional SVG of the sweep")
    p.add_argument("--metric", choices=sorted(METRICS), default="fitness")
    _add_keys(p, [k for k in {**RUN_KEYS, **SWEEP_KEYS}
                  if k not in ("creator_fraction", "creator_invent_rate", "iterations", "seed")])

    p = sub.add_parser("fitness-table", help="dump fitness of all 729 actions")
    p.add_argument("--out", required=True)
    p.add_argument("--w-move", dest="w_move", type=float, default=1.0)
    p.add_argument("--w-sym", dest="w_sym", type=float, default=5.0)

    p = sub.add_parser("plot", help="SVG chart from a sweep or time-series CSV")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--metric", choices=sorted(METRICS), default="fitness")
    p.add_argument("--out", required=True)
    return parser


def _flags(args: argparse.Namespace, keys) -> dict[str, str]:
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}


def _cmd_run(args: argparse.Namespace) -> None:
    file_values = read_config_file(args.config) if args.config else {}
    cfg = parse_config(file_values, _flags(args, RUN_KEYS), kind="run")
    records = run(cfg)
    header = provenance_header("run", run_config_items(cfg))
    _write(args.out, series_csv(records, header))
    if args.plot:
        _write(args.plot, series_svg(records, args.metric))


def _cmd_sweep(args: argparse.Namespace) -> None:
    file_values = read_config_file(args.config) if args.config else {}
    spec, threads = parse_config(file_values, _flags(args, {**RUN_KEYS, **SWEEP_KEYS}),
                                 kind="sweep")
    table = sweep(spec, threads=threads)
    _write(args.out, sweep_csv(table, provenance_header("sweep", sweep_config_items(spec))))
    if args.plot:
        _write(args.plot, sweep_svg(table, args.metric, spec.measure_at_iteration))


def _cmd_fitness_table(args: argparse.Namespace) -> None:
    weights = FitnessWeights(args.w_move, args.w_sym)
    header = provenance_header("fitness-table", [("w_move", repr(weights.w_move)),
                                                 ("w_sym", repr(weights.w_sym))])
    _write(args.out, fitness_table_csv(enumerate_fitness_table(weights), header))


def _cmd_plot(args: argparse.Namespace) -> None:
    table = read_table(args.inp)
    if not table:
        raise ValueError(f"{args.inp}: no rows")
    if hasattr(table[0], "invent_rate"):
        svg = sweep_svg(table, args.metric)
    else:
        svg = series_svg(table, args.metric)
    _write(args.out, svg)


COMMANDS = {"run": _cmd_run, "sweep": _cmd_sweep, "fitness-table": _cmd_fitness_table,
            "plot": _cmd_plot}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except (ConfigError, ValueError, OSError) as exc:
        print(f"evoc {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
