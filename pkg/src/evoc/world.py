"""Grid construction, topology and role placement.

Agent state is held column-wise in numpy arrays so the step kernel can run
over the whole population; :attr:`World.agents` gives per-agent views.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .agent import IMITATOR, INITIAL_P, AgentState, OperatorState, Role
from .domain import N_PARTS, Action, PartState

_MOORE = ((-1, -1), (0, -1), (1, -1), (-1, 0), (1, 0), (-1, 1), (0, 1), (1, 1))
_VON_NEUMANN = ((-1, 0), (1, 0), (0, -1), (0, 1))


class Topology(str, Enum):
    TOROIDAL = "toroidal"
    BOUNDED = "bounded"


class Neighborhood(str, Enum):
    MOORE = "moore"
    VON_NEUMANN = "von_neumann"

    @property
    def offsets(self) -> tuple[tuple[int, int], ...]:
        return _MOORE if self is Neighborhood.MOORE else _VON_NEUMANN


@dataclass(frozen=True)
class WorldConfig:
    width: int = 10
    height: int = 10
    topology: Topology = Topology.TOROIDAL
    neighborhood: Neighborhood = Neighborhood.MOORE
    creator_fraction: float = 0.0
    creator_invent_rate: float = 1.0

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError(f"width must be positive, got {self.width}")
        if self.height < 1:
            raise ValueError(f"height must be positive, got {self.height}")
        if not 0.0 <= self.creator_fraction <= 1.0:
            raise ValueError(f"creator_fraction must lie in [0, 1], got {self.creator_fraction}")
        if not 0.0 <= self.creator_invent_rate <= 1.0:
            raise ValueError(
                f"creator_invent_rate must lie in [0, 1], got {self.creator_invent_rate}")
        object.__setattr__(self, "topology", Topology(self.topology))
        object.__setattr__(self, "neighborhood", Neighborhood(self.neighborhood))

    @property
    def population(self) -> int:
        return self.width * self.height

    @property
    def n_creators(self) -> int:
        # round() is half-to-even.
        return int(round(self.creator_fraction * self.population))


def neighbor_cells(config: WorldConfig, cell: tuple[int, int]) -> list[tuple[int, int]]:
    """Coordinates ``(x, y)`` adjacent to ``cell``."""
    x, y = cell
    w, h = config.width, config.height
    if not (0 <= x < w and 0 <= y < h):
        raise ValueError(f"cell {cell} outside {w}x{h} grid")
    out = []
    for dx, dy in config.neighborhood.offsets:
        nx, ny = x + dx, y + dy
        if config.topology is Topology.TOROIDAL:
            nx, ny = nx % w, ny % h
        elif not (0 <= nx < w and 0 <= ny < h):
            continue
        if (nx, ny) != (x, y) and (nx, ny) not in out:
            out.append((nx, ny))
    return out


class World:
    """One agent per cell, indexed ``y * width + x``."""

    def __init__(self, config: WorldConfig, is_creator: np.ndarray) -> None:
        self.config = config
        n = config.population
        self.states = np.zeros((n, N_PARTS), dtype=np.int8)
        self.fitness = np.zeros(n, dtype=np.float64)
        self.p_im = np.full((n, N_PARTS), INITIAL_P)
        self.p_sym = np.full(n, INITIAL_P)
        self.is_creator = np.asarray(is_creator, dtype=bool)
        self.invent_rate = np.where(self.is_creator, config.creator_invent_rate, 0.0)

        rows = [[self.index(c) for c in neighbor_cells(config, self.position(i))]
                for i in range(n)]
        self.max_neighbors = max(len(r) for r in rows)
        self.neighbor_count = np.array([len(r) for r in rows], dtype=np.int64)
        self.neighbor_table = np.full((n, max(self.max_neighbors, 1)), -1, dtype=np.int64)
        for i, r in enumerate(rows):
            self.neighbor_table[i, :len(r)] = r

    @property
    def population(self) -> int:
        return self.config.population

    def index(self, cell: tuple[int, int]) -> int:
        return cell[1] * self.config.width + cell[0]

    def position(self, i: int) -> tuple[int, int]:
        y, x = divmod(i, self.config.width)
        return (x, y)

    def neighbors(self, cell: tuple[int, int]) -> list[tuple[int, int]]:
        return neighbor_cells(self.config, cell)

    def action(self, i: int) -> Action:
        return Action(tuple(PartState(int(s)) for s in self.states[i]))

    def agent(self, i: int) -> AgentState:
        """Snapshot of agent ``i``; mutating it does not write back."""
        role = Role.creator(self.config.creator_invent_rate) if self.is_creator[i] else IMITATOR
        ops = OperatorState(tuple(float(p) for p in self.p_im[i]), float(self.p_sym[i]))
        return AgentState(i, self.position(i), role, self.action(i), float(self.fitness[i]), ops)

    @property
    def agents(self) -> list[AgentState]:
        return [self.agent(i) for i in range(self.population)]

    def store(self, agent: AgentState) -> None:
        i = agent.id
        self.states[i] = [int(s) for s in agent.current_action]
        self.fitness[i] = agent.current_fitness
        self.p_im[i] = agent.operators.p_im
        self.p_sym[i] = agent.operators.p_sym

    def encodings(self) -> np.ndarray:
        return self.states.astype(np.int64) @ (3 ** np.arange(N_PARTS, dtype=np.int64))


def build_world(config: WorldConfig, rng: np.random.Generator) -> World:
    """Fresh world: everyone immobile, creators placed uniformly at random.

    Consumes exactly one ``rng.permutation(population)`` draw.
    """
    n = config.population
    is_creator = np.zeros(n, dtype=bool)
    is_creator[rng.permutation(n)[:config.n_creators]] = True
    return World(config, is_creator)
