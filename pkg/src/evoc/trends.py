"""Movement and symmetry signals read off an action.

These stand in for the MOVEMENT and SYMMETRY hidden nodes of the agent's
network; they are computed directly instead of by a trained autoassociator.
A different source of signals can be plugged in through :class:`TrendProvider`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, Sequence

from .domain import LIMB_PAIRS, Action


@dataclass(frozen=True)
class TrendSignals:
    movement: int
    symmetry: int


def movement_activation(action: Action | Sequence[int]) -> int:
    """Number of parts that are not stationary."""
    return sum(1 for s in action if s != 0)


def symmetry_activation(action: Action | Sequence[int]) -> int:
    """Number of limb pairs moving in opposite directions (0..2).

    HEAD and HIPS are unpaired and never count.
    """
    n = 0
    for a, b in LIMB_PAIRS:
        sa, sb = action[a], action[b]
        if sa != 0 and sb != 0 and sa != sb:
            n += 1
    return n


class TrendProvider(Protocol):
    def __call__(self, action: Action) -> TrendSignals: ...


def direct_trends(action: Action | Sequence[int]) -> TrendSignals:
    return TrendSignals(movement_activation(action), symmetry_activation(action))
