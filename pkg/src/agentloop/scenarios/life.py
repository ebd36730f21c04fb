"""Conway's Game of Life with one agent per cell.

Each cell agent perceives exactly two things — whether it is active and how
many of its eight neighbors are active — and registers an activation or
deactivation with the environment when Conway's rules demand a change.
Registrations are buffered in the state and committed all at once when the
last agent has acted, so every cell decides against the same generation:
the classic synchronous update.  Borders are dead; there is no wraparound.

:func:`conway_oracle` is an independent straight-line implementation of one
generation, used to cross-check the agent-based evolution.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..agent import Agent, Plan
from ..environment import Environment
from ..errors import ValidationError
from ..rng import SplitMix64
from ..values import ValueRecord

Grid = list[list[bool]]

_NEIGHBOR_OFFSETS = ((-1, -1), (0, -1), (1, -1), (-1, 0), (1, 0), (-1, 1), (0, 1), (1, 1))


@dataclass(frozen=True)
class GolConfig:
    width: int = 20
    height: int = 20
    alive_cells: tuple[tuple[int, int], ...] | None = None
    density: float | None = None
    seed: int = 0
    ticks: int = 50

    def validate(self) -> "GolConfig":
        if self.width <= 0 or self.height <= 0:
            raise ValidationError("grid dimensions must be positive")
        if self.ticks < 0:
            raise ValidationError("ticks must be non-negative")
        if self.alive_cells is not None and self.density is not None:
            raise ValidationError("give either aliveCells or density, not both")
        if self.density is not None and not 0.0 <= self.density <= 1.0:
            raise ValidationError("density must be within [0, 1]")
        if self.alive_cells is not None:
            for x, y in self.alive_cells:
                if not (0 <= x < self.width and 0 <= y < self.height):
                    raise ValidationError(f"alive cell ({x}, {y}) is out of bounds")
        return self

    @classmethod
    def from_value(cls, record: ValueRecord) -> "GolConfig":
        """Parse the external config record; a board given neither explicit
        cells nor a density defaults to a seeded random fill at 0.35."""
        known = {"width", "height", "aliveCells", "density", "seed", "ticks"}
        for key in record:
            if key not in known:
                raise ValidationError("unknown game-of-life config key", key)
        alive = record.get("aliveCells")
        if alive is not None:
            alive = tuple((int(x), int(y)) for x, y in alive)
        density = record.get("density")
        if alive is None and density is None:
            density = 0.35
        return cls(
            width=record.get("width", 20),
            height=record.get("height", 20),
            alive_cells=alive,
            density=density,
            seed=record.get("seed", 0),
            ticks=record.get("ticks", 50),
        ).validate()

    def initial_grid(self) -> Grid:
        if self.alive_cells is not None:
            alive = set(self.alive_cells)
            return [[(x, y) in alive for x in range(self.width)] for y in range(self.height)]
        if self.density is not None:
            return random_grid(self.width, self.height, self.density, self.seed)
        return [[False] * self.width for _ in range(self.height)]


def random_grid(width: int, height: int, density: float, seed: int = 0) -> Grid:
    """Seeded random board; cell order is row-major for reproducibility."""
    rng = SplitMix64(seed)
    return [[rng.next_float() < density for _ in range(width)] for _ in range(height)]


def conway_oracle(grid: Grid) -> Grid:
    """One synchronous generation: live cells survive with 2 or 3 live
    neighbors, dead cells come alive with exactly 3; borders are dead."""
    height = len(grid)
    width = len(grid[0]) if height else 0
    if any(len(row) != width for row in grid):
        raise ValidationError("grid must be rectangular")
    result: Grid = []
    for y in range(height):
        row = []
        for x in range(width):
            neighbors = 0
            for dx, dy in _NEIGHBOR_OFFSETS:
                nx, ny = x + dx, y + dy
                if 0 <= nx < width and 0 <= ny < height and grid[ny][nx]:
                    neighbors += 1
            row.append(neighbors == 3 or (grid[y][x] and neighbors == 2))
        result.append(row)
    return result


def _live_neighbors(grid: Grid, x: int, y: int, width: int, height: int) -> int:
    count = 0
    for dx, dy in _NEIGHBOR_OFFSETS:
        nx, ny = x + dx, y + dy
        if 0 <= nx < width and 0 <= ny < height and grid[ny][nx]:
            count += 1
    return count


def _cell_plans() -> list[Plan]:
    return [
        Plan(
            lambda b, _: not b["active"] and b["liveNeighbors"] == 3,
            lambda _: [{"register": "activate"}],
        ),
        Plan(
            lambda b, _: b["active"] and b["liveNeighbors"] not in (2, 3),
            lambda _: [{"register": "deactivate"}],
        ),
    ]


def grid_from_state(state: ValueRecord) -> Grid:
    return state["grid"]


def build_game_of_life(cfg: GolConfig) -> Environment:
    """One agent per cell over ``cfg``'s initial board."""
    cfg.validate()
    grid = cfg.initial_grid()
    width, height = cfg.width, cfg.height
    ids = [f"c{x}_{y}" for y in range(height) for x in range(width)]
    coord_of = {f"c{x}_{y}": (x, y) for y in range(height) for x in range(width)}
    last_id = ids[-1]

    plans = _cell_plans()  # stateless, shared by every cell agent
    agents = [
        Agent(
            agent_id,
            {
                "active": grid[y][x],
                "liveNeighbors": _live_neighbors(grid, x, y, width, height),
            },
            {},
            plans,
        )
        for agent_id, (x, y) in ((agent_id, coord_of[agent_id]) for agent_id in ids)
    ]

    def state_filter(state, agent_id, beliefs):
        x, y = coord_of[agent_id]
        board = state["grid"]
        return {
            "active": board[y][x],
            "liveNeighbors": _live_neighbors(board, x, y, width, height),
        }

    def update(actions, agent_id, state):
        pending = state["pending"]
        if actions:
            pending = {**pending, agent_id: actions[0][0]["register"] == "activate"}
        if agent_id != last_id:
            return ({"pending": pending}, []) if actions else ({}, [])
        board = [list(row) for row in state["grid"]]
        for cell_id, status in pending.items():
            cx, cy = coord_of[cell_id]
            board[cy][cx] = status
        alive = sum(1 for row in board for cell in row if cell)
        return {"grid": board, "pending": {}}, [f"alive={alive}"]

    def render(state, tick):
        return ["".join("#" if cell else "." for cell in row) for row in state["grid"]]

    state: ValueRecord = {"grid": [list(row) for row in grid], "pending": {}}
    return Environment(agents, state, update, render=render, state_filter=state_filter, seed=cfg.seed)
