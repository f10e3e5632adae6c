"""Actions, body parts and their canonical base-3 encoding."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator, Sequence

N_PARTS = 6
N_STATES = 3
N_ACTIONS = N_STATES**N_PARTS  # 729


class BodyPart(IntEnum):
    LEFT_ARM = 0
    RIGHT_ARM = 1
    LEFT_LEG = 2
    RIGHT_LEG = 3
    HEAD = 4
    HIPS = 5


class PartState(IntEnum):
    STATIONARY = 0
    LEFT = 1
    RIGHT = 2

    def flipped(self) -> "PartState":
        if self is PartState.STATIONARY:
            return self
        return PartState(3 - self)


# Limb pairs whose opposite-direction movement drives the symmetry signal.
LIMB_PAIRS = ((BodyPart.LEFT_ARM, BodyPart.RIGHT_ARM), (BodyPart.LEFT_LEG, BodyPart.RIGHT_LEG))

# PARTNER[i] is the paired limb of part i, or -1 for HEAD and HIPS.
PARTNER = (1, 0, 3, 2, -1, -1)


@dataclass(frozen=True)
class Action:
    """Six part states, indexed by :class:`BodyPart`."""

    states: tuple[PartState, ...]

    def __post_init__(self) -> None:
        if len(self.states) != N_PARTS:
            raise ValueError(f"an action has {N_PARTS} parts, got {len(self.states)}")
        object.__setattr__(self, "states", tuple(PartState(s) for s in self.states))

    @classmethod
    def of(cls, *states: int) -> "Action":
        return cls(tuple(PartState(s) for s in states))

    @classmethod
    def immobile(cls) -> "Action":
        return cls((PartState.STATIONARY,) * N_PARTS)

    def __getitem__(self, part: int) -> PartState:
        return self.states[part]

    def __iter__(self) -> Iterator[PartState]:
        return iter(self.states)

    def with_part(self, part: int, state: int) -> "Action":
        states = list(self.states)
        states[part] = PartState(state)
        return Action(tuple(states))

    def mirrored(self) -> "Action":
        """Swap LEFT and RIGHT on every part."""
        return Action(tuple(s.flipped() for s in self.states))

    def encode(self) -> int:
        return encode(self)

    def __repr__(self) -> str:
        return "Action(" + ",".join(s.name[0] for s in self.states) + ")"


def encode(action: Action | Sequence[int]) -> int:
    """Index in 0..728; part 0 is the least significant base-3 digit."""
    code = 0
    for i in range(N_PARTS - 1, -1, -1):
        code = code * N_STATES + int(action[i])
    return code


def decode(index: int) -> Action:
    if not 0 <= index < N_ACTIONS:
        raise ValueError(f"action index must be in 0..{N_ACTIONS - 1}, got {index}")
    states = []
    for _ in range(N_PARTS):
        index, digit = divmod(index, N_STATES)
        states.append(PartState(digit))
    return Action(tuple(states))


def all_actions() -> list[Action]:
    return [decode(i) for i in range(N_ACTIONS)]
