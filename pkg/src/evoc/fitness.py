"""The mating-display fitness F1 and its exhaustive table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .domain import N_ACTIONS, Action, decode
from .trends import movement_activation, symmetry_activation


@dataclass(frozen=True)
class FitnessWeights:
    """Reward per moving part and per opposite-direction limb pair."""

    w_move: float = 1.0
    w_sym: float = 5.0

    def __post_init__(self) -> None:
        if self.w_move < 0:
            raise ValueError(f"w_move must be non-negative, got {self.w_move}")
        if self.w_sym < 0:
            raise ValueError(f"w_sym must be non-negative, got {self.w_sym}")

    @property
    def optimum(self) -> float:
        return 6 * self.w_move + 2 * self.w_sym


DEFAULT_WEIGHTS = FitnessWeights()


def f1(action: Action | Sequence[int], weights: FitnessWeights = DEFAULT_WEIGHTS) -> float:
    """Movement reward plus symmetric-pair reward.

    A limb's marginal value depends on its partner: moving the right arm
    alone adds ``w_move``, but adds ``w_move + w_sym`` when the left arm
    already moves the other way.
    """
    return (weights.w_move * movement_activation(action)
            + weights.w_sym * symmetry_activation(action))


class FitnessRow(NamedTuple):
    encoding: int
    movement: int
    symmetry: int
    fitness: float


def enumerate_fitness_table(weights: FitnessWeights = DEFAULT_WEIGHTS) -> tuple[FitnessRow, ...]:
    """All 729 actions with their signals and fitness, sorted by encoding."""
    rows = []
    for code in range(N_ACTIONS):
        a = decode(code)
        rows.append(FitnessRow(code, movement_activation(a), symmetry_activation(a), f1(a, weights)))
    return tuple(rows)


def optimal_actions(weights: FitnessWeights = DEFAULT_WEIGHTS) -> tuple[float, list[int]]:
    """Maximum fitness and the encodings attaining it, by brute force."""
    table = enumerate_fitness_table(weights)
    best = max(r.fitness for r in table)
    return best, [r.encoding for r in table if r.fitness == best]
