"""Per-iteration protocol and run loop.

Random-stream discipline: one ``numpy`` Generator per run, seeded from
``RunConfig.seed``. Draws happen in this fixed sequence:

1. ``build_world``: one permutation of the population (creator placement).
2. each step: one permutation (SHUFFLED order only), then a
   ``(population, visit_draws)`` block of uniforms, one row per agent.

Every agent visit reads only its own row, so the number of draws does not
depend on what agents do, and observers never touch the stream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

from ._pykernel import visit_draws
from .fitness import DEFAULT_WEIGHTS, FitnessWeights
from .kernel import get_step_kernel
from .world import World, WorldConfig, build_world


class UpdateOrder(str, Enum):
    SHUFFLED = "shuffled"
    FIXED_SCAN = "fixed_scan"


@dataclass(frozen=True)
class RunConfig:
    world: WorldConfig = field(default_factory=WorldConfig)
    iterations: int = 15
    change_prob: float = 1 / 6
    weights: FitnessWeights = DEFAULT_WEIGHTS
    seed: int = 0
    update_order: UpdateOrder = UpdateOrder.SHUFFLED

    def __post_init__(self) -> None:
        if self.iterations < 0:
            raise ValueError(f"iterations must be non-negative, got {self.iterations}")
        if not 0.0 <= self.change_prob <= 1.0:
            raise ValueError(f"change_prob must lie in [0, 1], got {self.change_prob}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        object.__setattr__(self, "update_order", UpdateOrder(self.update_order))


@dataclass(frozen=True)
class MetricsRecord:
    iteration: int
    mean_fitness: float
    max_fitness: float
    diversity: int
    invention_adoptions: int = 0
    imitation_adoptions: int = 0


CSV_COLUMNS = ("iteration", "mean_fitness", "max_fitness", "diversity",
               "invention_adoptions", "imitation_adoptions")


def mean_fitness(world: World) -> float:
    return float(world.fitness.mean())


def diversity(world: World) -> int:
    """Number of distinct implemented actions."""
    return int(np.unique(world.encodings()).size)


def measure(world: World, iteration: int, n_inv: int = 0, n_imi: int = 0) -> MetricsRecord:
    return MetricsRecord(iteration, mean_fitness(world), float(world.fitness.max()),
                         diversity(world), int(n_inv), int(n_imi))


def step_draws(world: World, config: RunConfig,
               rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Visit order and uniform block for one step, in stream order."""
    n = world.population
    if config.update_order is UpdateOrder.SHUFFLED:
        order = rng.permutation(n).astype(np.int64)
    else:
        order = np.arange(n, dtype=np.int64)
    draws = rng.random((n, visit_draws(world.max_neighbors)))
    return order, draws


def step(world: World, config: RunConfig, rng: np.random.Generator,
         iteration: int = 0, backend: str | None = None) -> MetricsRecord:
    """Let every agent invent or imitate once; adoptions are visible immediately."""
    order, draws = step_draws(world, config, rng)
    kernel = get_step_kernel(backend)
    n_inv, n_imi = kernel(world.states, world.fitness, world.p_im, world.p_sym,
                          world.invent_rate, world.neighbor_table, world.neighbor_count,
                          order, draws, config.change_prob,
                          config.weights.w_move, config.weights.w_sym)
    return measure(world, iteration, n_inv, n_imi)


def run(config: RunConfig, observer: Callable[[int, World], None] | None = None,
        backend: str | None = None) -> list[MetricsRecord]:
    """Metrics for iterations ``0..config.iterations`` (0 is the immobile start)."""
    rng = np.random.default_rng(config.seed)
    world = build_world(config.world, rng)
    records = [measure(world, 0)]
    if observer is not None:
        observer(0, world)
    for t in range(1, config.iterations + 1):
        records.append(step(world, config, rng, t, backend))
        if observer is not None:
            observer(t, world)
    return records
