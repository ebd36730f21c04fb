"""Grid-world arena: coins, repairs, impassable mountains, and collisions.

Agents roam a rectangular field grid.  Moving toward a money or repair field
yields a coin or a health unit while leaving the agent in place; mountains
and the grid edge reject the move outright; moving onto a plain field
occupied by another agent is rejected and costs both agents health.  An
agent whose health reaches zero pays a bankruptcy penalty and is restored to
full health, so long runs never strand dead agents.

The bundled agents are seeded random walkers that never target mountain or
off-grid cells; everything they need — their own stats, the four adjacent
field types, and a random roll — arrives through perception, so the agents
themselves stay deterministic and pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..agent import Agent, Plan
from ..environment import Environment
from ..errors import InvalidDirectionError, UnknownAgentError, ValidationError
from ..rng import SplitMix64
from ..values import ValueRecord

MOUNTAIN = "mountain"
MONEY = "money"
REPAIR = "repair"
PLAIN = "plain"
FIELD_TYPES = (MOUNTAIN, MONEY, REPAIR, PLAIN)

DIRECTIONS = {"N": (0, -1), "E": (1, 0), "S": (0, 1), "W": (-1, 0)}
_DIRECTION_ORDER = ("N", "E", "S", "W")

FieldMap = tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class GridWorldConfig:
    width: int = 20
    height: int = 20
    field_map: FieldMap = ()
    agent_starts: tuple[tuple[int, int], ...] = ()
    max_health: int = 10
    collision_damage: int = 10
    bankruptcy_penalty: int = 100
    ticks: int = 100
    seed: int = 0

    def validate(self) -> "GridWorldConfig":
        if self.width <= 0 or self.height <= 0:
            raise ValidationError("grid dimensions must be positive")
        if len(self.field_map) != self.height or any(len(row) != self.width for row in self.field_map):
            raise ValidationError(f"field map must be {self.width}x{self.height}")
        for row in self.field_map:
            for cell in row:
                if cell not in FIELD_TYPES:
                    raise ValidationError(f"unknown field type '{cell}'")
        if len(set(self.agent_starts)) != len(self.agent_starts):
            raise ValidationError("agent start positions must be distinct")
        for x, y in self.agent_starts:
            if not (0 <= x < self.width and 0 <= y < self.height):
                raise ValidationError(f"start ({x}, {y}) is out of bounds")
            if self.field_map[y][x] != PLAIN:
                raise ValidationError(f"start ({x}, {y}) is not a plain field")
        if self.max_health <= 0 or self.collision_damage <= 0 or self.bankruptcy_penalty < 0:
            raise ValidationError("health and penalty parameters must be positive")
        if self.ticks < 0:
            raise ValidationError("ticks must be non-negative")
        return self

    @classmethod
    def from_value(cls, record: ValueRecord) -> "GridWorldConfig":
        known = {
            "width",
            "height",
            "fieldMap",
            "agentStarts",
            "agentCount",
            "maxHealth",
            "collisionDamage",
            "bankruptcyPenalty",
            "ticks",
            "seed",
        }
        for key in record:
            if key not in known:
                raise ValidationError("unknown grid-world config key", key)
        seed = record.get("seed", 0)
        if "fieldMap" not in record:
            generated = default_grid_world_config(
                seed=seed,
                width=record.get("width", 20),
                height=record.get("height", 20),
                agent_count=record.get("agentCount", 6),
                ticks=record.get("ticks", 100),
            )
            overrides = {
                "max_health": record.get("maxHealth", generated.max_health),
                "collision_damage": record.get("collisionDamage", generated.collision_damage),
                "bankruptcy_penalty": record.get("bankruptcyPenalty", generated.bankruptcy_penalty),
            }
            return GridWorldConfig(
                width=generated.width,
                height=generated.height,
                field_map=generated.field_map,
                agent_starts=generated.agent_starts,
                ticks=generated.ticks,
                seed=generated.seed,
                **overrides,
            ).validate()
        return cls(
            width=record.get("width", 20),
            height=record.get("height", 20),
            field_map=tuple(tuple(row) for row in record["fieldMap"]),
            agent_starts=tuple((int(x), int(y)) for x, y in record.get("agentStarts", [])),
            max_health=record.get("maxHealth", 10),
            collision_damage=record.get("collisionDamage", 10),
            bankruptcy_penalty=record.get("bankruptcyPenalty", 100),
            ticks=record.get("ticks", 100),
            seed=seed,
        ).validate()


def default_grid_world_config(
    seed: int = 0,
    *,
    width: int = 20,
    height: int = 20,
    agent_count: int = 6,
    ticks: int = 100,
) -> GridWorldConfig:
    """Seeded random arena: ~8% mountains, ~6% money, ~6% repair fields."""
    rng = SplitMix64(seed)
    rows = []
    for _ in range(height):
        row = []
        for _ in range(width):
            roll = rng.next_float()
            if roll < 0.08:
                row.append(MOUNTAIN)
            elif roll < 0.14:
                row.append(MONEY)
            elif roll < 0.20:
                row.append(REPAIR)
            else:
                row.append(PLAIN)
        rows.append(tuple(row))
    field_map = tuple(rows)

    plain_cells = [(x, y) for y in range(height) for x in range(width) if field_map[y][x] == PLAIN]
    if len(plain_cells) < agent_count:
        raise ValidationError("not enough plain fields for the requested agents")
    starts: list[tuple[int, int]] = []
    taken: set[tuple[int, int]] = set()
    while len(starts) < agent_count:
        cell = plain_cells[rng.randrange(len(plain_cells))]
        if cell not in taken:
            taken.add(cell)
            starts.append(cell)
    return GridWorldConfig(
        width=width,
        height=height,
        field_map=field_map,
        agent_starts=tuple(starts),
        ticks=ticks,
        seed=seed,
    ).validate()


def _damaged(stats: ValueRecord, world: ValueRecord) -> tuple[ValueRecord, bool]:
    health = max(0, stats["health"] - world["collisionDamage"])
    if health == 0:
        return {**stats, "health": world["maxHealth"], "coins": stats["coins"] - world["bankruptcyPenalty"]}, True
    return {**stats, "health": health}, False


def resolve_move(world: ValueRecord, agent_id: str, direction: str) -> tuple[ValueRecord, list[str]]:
    """Apply one movement request to the world; returns the new world and
    the resulting events.  The input world is never mutated."""
    agents = world["agents"]
    if agent_id not in agents:
        raise UnknownAgentError(f"no agent '{agent_id}' in this world")
    if direction not in DIRECTIONS:
        raise InvalidDirectionError(f"direction must be one of N, E, S, W, got {direction!r}")

    x, y = agents[agent_id]["position"]
    dx, dy = DIRECTIONS[direction]
    tx, ty = x + dx, y + dy
    if not (0 <= tx < world["width"] and 0 <= ty < world["height"]):
        return world, [f"{agent_id}: move {direction} blocked by edge"]
    field = world["fields"][ty][tx]
    if field == MOUNTAIN:
        return world, [f"{agent_id}: move {direction} blocked by mountain"]

    stats = agents[agent_id]
    if field == MONEY:
        new_stats = {**stats, "coins": stats["coins"] + 1}
        return {**world, "agents": {**agents, agent_id: new_stats}}, [f"{agent_id}: collected coin"]
    if field == REPAIR:
        if stats["health"] >= world["maxHealth"]:
            return world, [f"{agent_id}: repair not needed"]
        new_stats = {**stats, "health": stats["health"] + 1}
        return (
            {**world, "agents": {**agents, agent_id: new_stats}},
            [f"{agent_id}: repaired to {new_stats['health']}"],
        )

    occupant = next((other for other, s in agents.items() if other != agent_id and s["position"] == [tx, ty]), None)
    if occupant is None:
        new_stats = {**stats, "position": [tx, ty]}
        return (
            {**world, "agents": {**agents, agent_id: new_stats}},
            [f"{agent_id}: moved {direction} to ({tx}, {ty})"],
        )

    events = [f"{agent_id}: collision with {occupant}"]
    mover_stats, mover_broke = _damaged(stats, world)
    occupant_stats, occupant_broke = _damaged(agents[occupant], world)
    if mover_broke:
        events.append(f"{agent_id}: bankruptcy")
    if occupant_broke:
        events.append(f"{occupant}: bankruptcy")
    return {**world, "agents": {**agents, agent_id: mover_stats, occupant: occupant_stats}}, events


def build_grid_world(cfg: GridWorldConfig) -> Environment:
    """Arena environment with seeded random-walk agents."""
    cfg.validate()
    ids = [f"walker{i}" for i in range(len(cfg.agent_starts))]
    rng = SplitMix64(cfg.seed)

    def walker_plan() -> Plan:
        def candidates(beliefs):
            return [d for d in _DIRECTION_ORDER if beliefs["fields"][d] not in (MOUNTAIN, "edge")]

        return Plan(
            lambda b, _: bool(candidates(b)),
            lambda b: [{"move": candidates(b)[b["roll"] % len(candidates(b))]}],
        )

    agents = [
        Agent(
            agent_id,
            {"coins": 0, "health": cfg.max_health, "position": [x, y], "fields": {}, "roll": 0},
            {},
            [walker_plan()],
        )
        for agent_id, (x, y) in zip(ids, cfg.agent_starts)
    ]

    def state_filter(state, agent_id, beliefs):
        stats = state["agents"][agent_id]
        x, y = stats["position"]
        fields = {}
        for name, (dx, dy) in DIRECTIONS.items():
            nx, ny = x + dx, y + dy
            if 0 <= nx < state["width"] and 0 <= ny < state["height"]:
                fields[name] = state["fields"][ny][nx]
            else:
                fields[name] = "edge"
        return {
            "coins": stats["coins"],
            "health": stats["health"],
            "position": list(stats["position"]),
            "fields": fields,
            "roll": rng.next_uint64() >> 11,
        }

    def update(actions, agent_id, state):
        if not actions:
            return {}, []
        new_world, events = resolve_move(state, agent_id, actions[0][0]["move"])
        return {"agents": new_world["agents"]}, events

    def render(state, tick):
        return [
            f"{agent_id} pos=({stats['position'][0]}, {stats['position'][1]}) "
            f"coins={stats['coins']} health={stats['health']}"
            for agent_id, stats in state["agents"].items()
        ]

    state: ValueRecord = {
        "width": cfg.width,
        "height": cfg.height,
        "maxHealth": cfg.max_health,
        "collisionDamage": cfg.collision_damage,
        "bankruptcyPenalty": cfg.bankruptcy_penalty,
        "fields": [list(row) for row in cfg.field_map],
        "agents": {
            agent_id: {"coins": 0, "health": cfg.max_health, "position": [x, y]}
            for agent_id, (x, y) in zip(ids, cfg.agent_starts)
        },
    }
    return Environment(agents, state, update, render=render, state_filter=state_filter, rng=rng)
