"""Single-agent behaviour: invention, imitation and the knowledge-based operators.

The engine runs these rules through a vectorised kernel. The functions here
work on one :class:`AgentState` at a time and share their arithmetic with
the pure-Python kernel, so both paths agree draw for draw.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from . import _pykernel as _k
from .domain import Action, PartState
from .fitness import DEFAULT_WEIGHTS, FitnessWeights, f1
from .trends import TrendSignals, direct_trends

INITIAL_P = 0.5


@dataclass(frozen=True)
class OperatorState:
    """Adaptive biases on invention.

    ``p_im[i]`` is the probability that a change at part ``i`` increases
    movement (the decrease probability is ``1 - p_im[i]``). ``p_sym`` is the
    probability that a limb starting to move goes opposite to its moving partner.
    """

    p_im: tuple[float, ...] = (INITIAL_P,) * 6
    p_sym: float = INITIAL_P

    def __post_init__(self) -> None:
        if len(self.p_im) != 6:
            raise ValueError("p_im needs one probability per body part")
        if not all(0.0 <= p <= 1.0 for p in self.p_im) or not 0.0 <= self.p_sym <= 1.0:
            raise ValueError("operator probabilities must lie in [0, 1]")

    @property
    def p_dm(self) -> tuple[float, ...]:
        return tuple(1.0 - p for p in self.p_im)


@dataclass(frozen=True)
class Role:
    """IMITATOR when ``invent_rate`` is None, otherwise a creator."""

    invent_rate: float | None = None

    def __post_init__(self) -> None:
        if self.invent_rate is not None and not 0.0 <= self.invent_rate <= 1.0:
            raise ValueError("invent_rate must lie in [0, 1]")

    @classmethod
    def creator(cls, invent_rate: float) -> "Role":
        return cls(float(invent_rate))

    @property
    def is_creator(self) -> bool:
        return self.invent_rate is not None

    @property
    def effective_rate(self) -> float:
        return 0.0 if self.invent_rate is None else self.invent_rate


IMITATOR = Role()


@dataclass
class AgentState:
    id: int
    position: tuple[int, int] = (0, 0)
    role: Role = IMITATOR
    current_action: Action = field(default_factory=Action.immobile)
    current_fitness: float = 0.0
    operators: OperatorState = field(default_factory=OperatorState)

    @classmethod
    def fresh(cls, id: int, position: tuple[int, int] = (0, 0), role: Role = IMITATOR,
              weights: FitnessWeights = DEFAULT_WEIGHTS) -> "AgentState":
        a = Action.immobile()
        return cls(id, position, role, a, f1(a, weights), OperatorState())


def _step(p: float, up: bool) -> float:
    return min(1.0, p + _k.OP_STEP) if up else max(0.0, p - _k.OP_STEP)


def update_movement_operator(ops: OperatorState, prev: TrendSignals,
                             adopted: TrendSignals) -> OperatorState:
    if adopted.movement == prev.movement:
        return ops
    up = adopted.movement > prev.movement
    return replace(ops, p_im=tuple(_step(p, up) for p in ops.p_im))


def update_symmetry_operator(ops: OperatorState, prev: TrendSignals,
                             adopted: TrendSignals) -> OperatorState:
    if adopted.symmetry == prev.symmetry:
        return ops
    return replace(ops, p_sym=_step(ops.p_sym, adopted.symmetry > prev.symmetry))


def visit_draws(rng: np.random.Generator, max_neighbors: int = 8) -> list[float]:
    return rng.random(_k.visit_draws(max_neighbors)).tolist()


def invent_from_draws(agent: AgentState, change_prob: float, u: Sequence[float]) -> Action:
    cand = _k.mutate([int(s) for s in agent.current_action], list(agent.operators.p_im),
                     agent.operators.p_sym, change_prob, u)
    return Action(tuple(PartState(s) for s in cand))


def invent(agent: AgentState, change_prob: float, rng: np.random.Generator) -> Action:
    """Candidate idea derived from the agent's current action.

    Each part independently undergoes a change event with probability
    ``change_prob``. An increase starts a stationary part moving (direction
    biased by ``p_sym`` when its partner limb moves) or flips a moving one;
    a decrease stops the part.
    """
    return invent_from_draws(agent, change_prob, visit_draws(rng))


def adopt(agent: AgentState, action: Action, fitness: float) -> None:
    prev = direct_trends(agent.current_action)
    new = direct_trends(action)
    ops = update_movement_operator(agent.operators, prev, new)
    agent.operators = update_symmetry_operator(ops, prev, new)
    agent.current_action = action
    agent.current_fitness = fitness


def try_invent_from_draws(agent: AgentState, weights: FitnessWeights, change_prob: float,
                          u: Sequence[float]) -> Action | None:
    cand = invent_from_draws(agent, change_prob, u)
    fit = f1(cand, weights)
    if not fit > agent.current_fitness:
        return None
    adopt(agent, cand, fit)
    return cand


def try_invent(agent: AgentState, weights: FitnessWeights, change_prob: float,
               rng: np.random.Generator) -> Action | None:
    """Invent, mentally simulate, and adopt only if strictly fitter.

    Returns the adopted action, or None when the agent keeps its action.
    """
    return try_invent_from_draws(agent, weights, change_prob, visit_draws(rng))


def try_imitate_from_draws(agent: AgentState, neighbor_actions: Sequence[Action],
                           weights: FitnessWeights, u: Sequence[float]) -> Action | None:
    fits = [f1(a, weights) for a in neighbor_actions]
    j = _k.pick_fitter(agent.current_fitness, range(len(fits)), fits, u)
    if j < 0:
        return None
    adopt(agent, neighbor_actions[j], fits[j])
    return neighbor_actions[j]


def try_imitate(agent: AgentState, neighbor_actions: Sequence[Action],
                weights: FitnessWeights, rng: np.random.Generator) -> Action | None:
    """Copy the first strictly fitter neighbour action, visited in random order."""
    if not neighbor_actions:
        raise ValueError("imitation needs at least one neighbour")
    return try_imitate_from_draws(agent, neighbor_actions, weights,
                                  visit_draws(rng, len(neighbor_actions)))
