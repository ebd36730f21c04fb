"""Synchronous environment loop with deterministic, serializable traces.

The environment owns the shared state and a registry of agents in
registration order.  One tick processes agents sequentially: each agent
perceives the current state through the state filter, reasons, and its
actions are folded into the state through the update function before the next
agent perceives.  After the last agent, the render function runs once and a
complete :class:`TickRecord` is appended to the trace.

Everything observable is data: update functions return log events instead of
printing, and the trace captures perceptions, actions, state updates, state
snapshots, and render lines for every tick.  Given the same agents, state,
seed, and iteration count, two runs produce byte-identical serialized traces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .agent import ActionRecord, Agent, BeliefMap
from .errors import AgentFault, ValidationError
from .rng import SplitMix64
from .values import (
    Value,
    ValueRecord,
    canonical_dumps,
    canonical_loads,
    shallow_merge,
    validate_record,
)

UpdateFunction = Callable[[list[list[ActionRecord]], str, ValueRecord], object]
StateFilter = Callable[[ValueRecord, str, BeliefMap], ValueRecord]
RenderFunction = Callable[[ValueRecord, int], list[str]]


class FaultPolicy(Enum):
    """What a tick does when an agent faults: abort, or carry on without it."""

    HALT = "halt"
    SKIP_AGENT = "skip-agent"


def default_state_filter(state: ValueRecord, agent_id: str, beliefs: BeliefMap) -> ValueRecord:
    """Fully observable world: every agent perceives the whole state."""
    return state


def default_render(state: ValueRecord, tick: int) -> list[str]:
    """Log the full state once per tick, in canonical form."""
    return [canonical_dumps(state)]


@dataclass
class AgentTickRecord:
    """One agent's slice of a tick: what it saw, did, and caused."""

    agent_id: str
    perceived_update: ValueRecord
    actions: list[list[ActionRecord]]
    state_update: ValueRecord
    log_events: list[str]

    def to_value(self) -> ValueRecord:
        return {
            "agentId": self.agent_id,
            "perceivedUpdate": self.perceived_update,
            "actions": self.actions,
            "stateUpdate": self.state_update,
            "logEvents": list(self.log_events),
        }

    @classmethod
    def from_value(cls, record: Value) -> "AgentTickRecord":
        _expect_record(record, "per-agent record")
        return cls(
            agent_id=_expect(record, "agentId", str),
            perceived_update=_expect(record, "perceivedUpdate", dict),
            actions=_expect(record, "actions", list),
            state_update=_expect(record, "stateUpdate", dict),
            log_events=_expect(record, "logEvents", list),
        )


@dataclass
class TickRecord:
    """Full record of one tick, in agent registration order."""

    tick: int
    per_agent: list[AgentTickRecord]
    state_after: ValueRecord
    render_lines: list[str]

    def to_value(self) -> ValueRecord:
        return {
            "tick": self.tick,
            "perAgent": [entry.to_value() for entry in self.per_agent],
            "stateAfter": self.state_after,
            "renderLines": list(self.render_lines),
        }

    @classmethod
    def from_value(cls, record: Value) -> "TickRecord":
        _expect_record(record, "tick record")
        return cls(
            tick=_expect(record, "tick", int),
            per_agent=[AgentTickRecord.from_value(entry) for entry in _expect(record, "perAgent", list)],
            state_after=_expect(record, "stateAfter", dict),
            render_lines=_expect(record, "renderLines", list),
        )


@dataclass
class Trace:
    """Deterministic record of a run: the seed plus ticks contiguous from 1."""

    seed: int
    ticks: list[TickRecord] = field(default_factory=list)

    def to_value(self) -> ValueRecord:
        return {"seed": self.seed, "ticks": [record.to_value() for record in self.ticks]}

    @classmethod
    def from_value(cls, record: Value) -> "Trace":
        _expect_record(record, "trace")
        return cls(
            seed=_expect(record, "seed", int),
            ticks=[TickRecord.from_value(entry) for entry in _expect(record, "ticks", list)],
        )


def _expect_record(value: Value, what: str) -> None:
    if not isinstance(value, dict):
        raise ValidationError(f"{what} must be a record, got {type(value).__name__}")


def _expect(record: dict, key: str, kind: type):
    if key not in record:
        raise ValidationError(f"missing key '{key}'")
    value = record[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise ValidationError(f"key '{key}' must be {kind.__name__}, got {type(value).__name__}")
    return value


def serialize_trace(trace: Trace) -> str:
    """Canonical JSON text of a trace; one trace per file by convention."""
    return canonical_dumps(trace.to_value())


def deserialize_trace(text: str) -> Trace:
    """Inverse of :func:`serialize_trace`; round-trips are identity."""
    return Trace.from_value(canonical_loads(text))


class Environment:
    """Hosts agents and shared state and runs the synchronous tick loop.

    ``update(actions, agent_id, state)`` returns either a state-update record
    or a ``(state_update, log_events)`` pair; the update is shallow-merged
    into the state, which is how the environment decides which requested
    changes actually apply.  ``render(state, tick)`` produces the tick's
    render lines, and ``state_filter(state, agent_id, beliefs)`` shapes what
    each agent perceives (identity by default, i.e. full observability).

    A single environment runs on one logical thread; distinct instances are
    independent.  The optional ``rng`` is the stream scenario closures should
    share for reproducible stochastic behavior.
    """

    def __init__(
        self,
        agents: list[Agent],
        state: ValueRecord,
        update: UpdateFunction,
        render: RenderFunction | None = None,
        state_filter: StateFilter | None = None,
        *,
        seed: int = 0,
        rng: SplitMix64 | None = None,
        fault_policy: FaultPolicy = FaultPolicy.HALT,
    ):
        agents = list(agents)
        ids = [agent.id for agent in agents]
        if len(set(ids)) != len(ids):
            duplicate = next(agent_id for agent_id in ids if ids.count(agent_id) > 1)
            raise ValidationError(f"duplicate agent id '{duplicate}'")
        validate_record(state)
        if not callable(update):
            raise ValidationError("update function must be callable")

        self.agents = agents
        self.state = state
        self.update = update
        self.render = render if render is not None else default_render
        self.state_filter = state_filter if state_filter is not None else default_state_filter
        self.rng = rng if rng is not None else SplitMix64(seed)
        self.seed = self.rng.seed
        self.fault_policy = fault_policy
        self.tick_count = 0
        self._ticks: list[TickRecord] = []

    @property
    def trace(self) -> Trace:
        """Accumulated trace of every tick since construction."""
        return Trace(seed=self.seed, ticks=list(self._ticks))

    def tick(self) -> TickRecord:
        """Run one full pass over all agents; returns the appended record.

        Under ``FaultPolicy.HALT`` an agent fault aborts the tick: the fault
        propagates with the partial record attached, the counter does not
        advance, and state changes made earlier in the tick remain applied.
        Under ``FaultPolicy.SKIP_AGENT`` the faulting agent contributes no
        actions and the fault is recorded in its log events.  Failures in the
        update, render, or state-filter functions are environment bugs and
        propagate as-is.
        """
        number = self.tick_count + 1
        per_agent: list[AgentTickRecord] = []
        for agent in self.agents:
            perceived = self.state_filter(self.state, agent.id, agent.beliefs)
            # Agent.next validates the perception before merging it, so a
            # state filter returning junk surfaces as a ValidationError here.
            try:
                actions = agent.next(perceived)
            except AgentFault as fault:
                if self.fault_policy is FaultPolicy.HALT:
                    fault.partial_record = TickRecord(number, per_agent, self.state, [])
                    raise
                per_agent.append(AgentTickRecord(agent.id, perceived, [], {}, [f"fault skipped: {fault}"]))
                continue
            returned = self.update(actions, agent.id, self.state)
            if isinstance(returned, tuple):
                state_update, log_events = returned
            else:
                state_update, log_events = returned, []
            validate_record(state_update)
            log_events = [str(line) for line in log_events]
            self.state = shallow_merge(self.state, state_update)
            per_agent.append(AgentTickRecord(agent.id, perceived, actions, state_update, log_events))

        render_lines = [str(line) for line in self.render(self.state, number)]
        self.tick_count = number
        record = TickRecord(number, per_agent, self.state, render_lines)
        self._ticks.append(record)
        return record

    def run(self, iterations: int) -> Trace:
        """Execute ``iterations`` ticks and return the accumulated trace."""
        if iterations < 0:
            raise ValidationError("iterations must be non-negative")
        for _ in range(iterations):
            self.tick()
        return self.trace
