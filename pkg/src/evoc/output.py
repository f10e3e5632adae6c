"""CSV writers and readers for time series, sweep tables and the fitness table."""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, Sequence

from .engine import CSV_COLUMNS, MetricsRecord
from .experiments import SWEEP_COLUMNS, SweepCell
from .fitness import FitnessRow

FITNESS_TABLE_COLUMNS = ("encoding", "movement", "symmetry", "fitness")


def _cell(v: object) -> str:
    return repr(v) if isinstance(v, float) else str(v)


def _csv(header: str, columns: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buf = io.StringIO()
    buf.write(header)
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(v) for v in row])
    return buf.getvalue()


def series_csv(records: Sequence[MetricsRecord], header: str = "") -> str:
    return _csv(header, CSV_COLUMNS, ([getattr(r, c) for c in CSV_COLUMNS] for r in records))


def sweep_csv(cells: Sequence[SweepCell], header: str = "") -> str:
    return _csv(header, SWEEP_COLUMNS, ([getattr(c, k) for k in SWEEP_COLUMNS] for c in cells))


def fitness_table_csv(rows: Sequence[FitnessRow], header: str = "") -> str:
    return _csv(header, FITNESS_TABLE_COLUMNS, rows)


def _rows(path: str | Path) -> tuple[list[str], list[dict[str, str]]]:
    lines = [ln for ln in Path(path).read_text().splitlines() if ln and not ln.startswith("#")]
    reader = csv.DictReader(lines)
    rows = list(reader)
    return list(reader.fieldnames or []), rows


def read_table(path: str | Path) -> list[SweepCell] | list[MetricsRecord]:
    """Load a sweep CSV or a time-series CSV, judged by its columns."""
    columns, rows = _rows(path)
    if tuple(columns) == SWEEP_COLUMNS:
        return [SweepCell(creator_fraction=float(r["creator_fraction"]),
                          invent_rate=float(r["invent_rate"]),
                          mean_fitness_avg=float(r["mean_fitness_avg"]),
                          mean_fitness_stderr=float(r["mean_fitness_stderr"]),
                          diversity_avg=float(r["diversity_avg"]),
                          diversity_stderr=float(r["diversity_stderr"]),
                          n_runs=int(r["n_runs"])) for r in rows]
    if tuple(columns) == CSV_COLUMNS:
        return [MetricsRecord(int(r["iteration"]), float(r["mean_fitness"]),
                              float(r["max_fitness"]), int(r["diversity"]),
                              int(r["invention_adoptions"]), int(r["imitation_adoptions"]))
                for r in rows]
    raise ValueError(f"{path}: unrecognised columns {columns}")
