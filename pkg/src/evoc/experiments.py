"""Creator-fraction by invent-rate sweeps and their summaries."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np
from scipy.stats import spearmanr

from .engine import RunConfig, run

DEFAULT_FRACTIONS = tuple(round(0.1 * i, 1) for i in range(11))
DEFAULT_RATES = (0.25, 0.5, 0.75, 1.0)

SWEEP_COLUMNS = ("invent_rate", "creator_fraction", "n_runs", "mean_fitness_avg",
                 "mean_fitness_stderr", "diversity_avg", "diversity_stderr")


@dataclass(frozen=True)
class SweepSpec:
    creator_fractions: tuple[float, ...] = DEFAULT_FRACTIONS
    invent_rates: tuple[float, ...] = DEFAULT_RATES
    runs_per_cell: int = 100
    measure_at_iteration: int = 15
    base: RunConfig = field(default_factory=RunConfig)
    master_seed: int = 0

    def __post_init__(self) -> None:
        if not self.creator_fractions:
            raise ValueError("creator_fractions must not be empty")
        if not self.invent_rates:
            raise ValueError("invent_rates must not be empty")
        if any(not 0.0 <= f <= 1.0 for f in self.creator_fractions):
            raise ValueError("creator_fractions must lie in [0, 1]")
        if any(not 0.0 < p <= 1.0 for p in self.invent_rates):
            raise ValueError("invent_rates must lie in (0, 1]")
        if self.runs_per_cell < 1:
            raise ValueError("runs_per_cell must be positive")
        if self.measure_at_iteration < 1:
            raise ValueError("measure_at_iteration must be positive")
        object.__setattr__(self, "creator_fractions", tuple(self.creator_fractions))
        object.__setattr__(self, "invent_rates", tuple(self.invent_rates))


@dataclass(frozen=True)
class SweepCell:
    creator_fraction: float
    invent_rate: float
    mean_fitness_avg: float
    mean_fitness_stderr: float
    diversity_avg: float
    diversity_stderr: float
    n_runs: int


def _ppm(x: float) -> int:
    return int(round(x * 1_000_000))


def run_seed(master_seed: int, creator_fraction: float, invent_rate: float, run_index: int) -> int:
    """Seed of one run, derived only from its own coordinates in the sweep."""
    ss = np.random.SeedSequence([master_seed, _ppm(creator_fraction), _ppm(invent_rate), run_index])
    return int(ss.generate_state(1, np.uint64)[0])


def cell_config(spec: SweepSpec, creator_fraction: float, invent_rate: float,
                run_index: int) -> RunConfig:
    world = replace(spec.base.world, creator_fraction=creator_fraction,
                    creator_invent_rate=invent_rate)
    return replace(spec.base, world=world, iterations=spec.measure_at_iteration,
                   seed=run_seed(spec.master_seed, creator_fraction, invent_rate, run_index))


def _stderr(xs: np.ndarray) -> float:
    if xs.size < 2:
        return 0.0
    return float(xs.std(ddof=1) / math.sqrt(xs.size))


def run_cell(spec: SweepSpec, creator_fraction: float, invent_rate: float) -> SweepCell:
    fit = np.empty(spec.runs_per_cell)
    div = np.empty(spec.runs_per_cell)
    for r in range(spec.runs_per_cell):
        last = run(cell_config(spec, creator_fraction, invent_rate, r))[-1]
        fit[r], div[r] = last.mean_fitness, last.diversity
    return SweepCell(creator_fraction, invent_rate, float(fit.mean()), _stderr(fit),
                     float(div.mean()), _stderr(div), spec.runs_per_cell)


def _run_cell_args(args: tuple[SweepSpec, float, float]) -> SweepCell:
    return run_cell(*args)


def sweep(spec: SweepSpec, threads: int = 1) -> list[SweepCell]:
    """Every (invent_rate, creator_fraction) cell, sorted in that order.

    Cells are independent, so ``threads > 1`` farms them out to worker
    processes without changing any number in the result.
    """
    jobs = [(spec, f, p) for p in sorted(spec.invent_rates) for f in sorted(spec.creator_fractions)]
    if threads <= 1:
        return [run_cell(*j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_run_cell_args, jobs))


def correlate(table: Sequence[SweepCell], x: str = "creator_fraction",
              y: str = "diversity_avg") -> dict[float, float | None]:
    """Spearman rho of ``y`` against ``x`` within each invent_rate group.

    A constant series has no defined rank correlation and maps to None.
    """
    groups: dict[float, list[SweepCell]] = {}
    for cell in table:
        groups.setdefault(cell.invent_rate, []).append(cell)
    out: dict[float, float | None] = {}
    for rate in sorted(groups):
        rows = groups[rate]
        if len(rows) < 3:
            raise ValueError(f"need at least 3 rows per invent_rate, got {len(rows)} at {rate}")
        out[rate] = rank_correlation([getattr(c, x) for c in rows], [getattr(c, y) for c in rows])
    return out


def rank_correlation(xs: Sequence[float], ys: Sequence[float]) -> float | None:
    if len(set(xs)) < 2 or len(set(ys)) < 2:
        return None
    return float(spearmanr(xs, ys).statistic)
