"""Opinion spread in an agent society with loudness-weighted announcements.

Every agent holds one boolean opinion and announces it each tick.  The
environment keeps the previous round's announcements as the pool for the
current tick and hands every agent two samples from it, drawn with
replacement and excluding the agent's own announcement.  An announcement's
sampling weight is the loudness of its author's kind multiplied by
``1 + bias`` when the announcement is ``True`` (``1`` otherwise), so a
positive bias favors the spread of ``True``.

Two agent kinds decide differently:

* volatile — majority over the current opinion and the two announcements
  just received; louder (default weight 2.0);
* introspective — majority over the current opinion and all announcements
  received in the last five ticks (up to ten); quieter (default weight 1.0).

Ties keep the current opinion.  New announcements are buffered in the state
and committed when the last agent has acted, so the pool is fixed for the
whole tick.

Sampling procedure, shared with the test oracle: one draw consumes one
``next_float`` from the environment generator; ``u = next_float() * total``
where ``total`` is the left-to-right sum of the other agents' weights in
registration order, and the drawn announcement is the first whose running
cumulative weight exceeds ``u`` (falling back to the last other agent if
rounding pushes ``u`` past the total).
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from ..agent import Agent, Plan, PlanResult
from ..environment import Environment, Trace
from ..errors import ShapeError, ValidationError
from ..rng import SplitMix64
from ..values import ValueRecord

VOLATILE = "volatile"
INTROSPECTIVE = "introspective"

HISTORY_WINDOW = 10  # five ticks of two received announcements each


@dataclass(frozen=True)
class OpinionConfig:
    agent_count: int = 100
    volatile_true: int = 30
    volatile_false: int = 20
    introspective_true: int = 20
    introspective_false: int = 30
    bias: float = 0.0
    loudness_volatile: float = 2.0
    loudness_introspective: float = 1.0
    ticks: int = 20
    seed: int = 0

    _KEYS = {
        "agentCount": "agent_count",
        "volatileTrue": "volatile_true",
        "volatileFalse": "volatile_false",
        "introspectiveTrue": "introspective_true",
        "introspectiveFalse": "introspective_false",
        "bias": "bias",
        "loudnessVolatile": "loudness_volatile",
        "loudnessIntrospective": "loudness_introspective",
        "ticks": "ticks",
        "seed": "seed",
    }

    def validate(self) -> "OpinionConfig":
        counts = (self.volatile_true, self.volatile_false, self.introspective_true, self.introspective_false)
        if any(not isinstance(c, int) or isinstance(c, bool) or c < 0 for c in counts):
            raise ValidationError("agent counts must be non-negative integers")
        if sum(counts) != self.agent_count:
            raise ValidationError(
                f"agent kind counts sum to {sum(counts)}, expected agentCount={self.agent_count}"
            )
        if self.agent_count < 2:
            raise ValidationError("need at least two agents to distribute announcements")
        if self.bias < 0:
            raise ValidationError("bias must be non-negative")
        if self.loudness_volatile <= 0 or self.loudness_introspective <= 0:
            raise ValidationError("loudness weights must be positive")
        if self.ticks < 0:
            raise ValidationError("ticks must be non-negative")
        return self

    @classmethod
    def from_value(cls, record: ValueRecord) -> "OpinionConfig":
        values = {}
        for key, value in record.items():
            if key not in cls._KEYS:
                raise ValidationError("unknown opinion config key", key)
            values[cls._KEYS[key]] = value
        defaults = {f.name: f.default for f in fields(cls)}
        defaults.update(values)
        return cls(**defaults).validate()


def volatile_decision(opinion: bool, received: list[bool]) -> bool:
    """Majority over {current opinion, the two announcements just received}."""
    true_votes = int(opinion) + sum(1 for value in received if value)
    return true_votes >= 2


def introspective_decision(opinion: bool, history: list[bool]) -> bool:
    """Majority over {current opinion} and the retained announcement window;
    ties keep the current opinion."""
    true_votes = int(opinion) + sum(1 for value in history if value)
    false_votes = 1 + len(history) - true_votes
    if true_votes > false_votes:
        return True
    if false_votes > true_votes:
        return False
    return opinion


def _opinion_plan(kind: str) -> Plan:
    def body(beliefs):
        received = beliefs["received"]
        history = (beliefs["history"] + received)[-HISTORY_WINDOW:]
        if kind == VOLATILE:
            announce = volatile_decision(beliefs["opinion"], received)
        else:
            announce = introspective_decision(beliefs["opinion"], history)
        return PlanResult([{"announce": announce}], {"opinion": announce, "history": history})

    return Plan(lambda beliefs, _: True, body)


def _build_sampler(ids, kinds, loudness, bias, rng):
    index_of = {agent_id: i for i, agent_id in enumerate(ids)}
    n = len(ids)
    base = np.array([loudness[kind] for kind in kinds], dtype=np.float64)
    next_float = rng.next_float
    cache: dict = {"pool": None}

    def state_filter(state, agent_id, beliefs):
        announcements = state["announcements"]
        if cache["pool"] is not announcements:
            # one cumulative-weight row per agent, own announcement zeroed;
            # row-wise cumsum keeps the exact left-to-right float additions
            # the documented sampling procedure prescribes
            values = [bool(announcements[other]) for other in ids]
            weights = base * np.where(values, 1.0 + bias, 1.0)
            tiled = np.tile(weights, (n, 1))
            np.fill_diagonal(tiled, 0.0)
            cache.update(pool=announcements, values=values, cumulative=np.cumsum(tiled, axis=1))
        i = index_of[agent_id]
        row = cache["cumulative"][i]
        total = float(row[-1])
        values = cache["values"]
        received = []
        for _ in range(2):
            u = next_float() * total
            k = int(row.searchsorted(u, side="right"))
            if k >= n:
                k = n - 1 if i != n - 1 else n - 2
            received.append(values[k])
        return {"received": received}

    return state_filter


def _build_update(ids):
    # New announcements are buffered as a bitstring in agent order ("1" for
    # True) and committed into the announcement record once the last agent
    # has acted, keeping the sampling pool fixed for the whole tick.
    last_id = ids[-1]

    def update(actions, agent_id, state):
        announced = bool(actions[0][0]["announce"])
        pending = state["pending"] + ("1" if announced else "0")
        if agent_id != last_id:
            return {"pending": pending}, []
        announcements = {other: bit == "1" for other, bit in zip(ids, pending)}
        true_count = sum(1 for value in announcements.values() if value)
        logs = [f"announcements: true={true_count} false={len(announcements) - true_count}"]
        return {"announcements": announcements, "pending": ""}, logs

    return update


def _render(state, tick):
    announcements = state["announcements"]
    true_count = sum(1 for value in announcements.values() if value)
    return [f"true={true_count} false={len(announcements) - true_count}"]


def build_opinion_env(
    kinds: list[str],
    opinions: list[bool],
    *,
    bias: float = 0.0,
    loudness_volatile: float = 2.0,
    loudness_introspective: float = 1.0,
    seed: int = 0,
) -> Environment:
    """Build the society from an explicit per-agent kind/opinion layout.

    :func:`build_opinion_spread` is the config-driven entry point; this one
    exists for experiments that need a custom layout, such as checking label
    symmetry under a true/false relabeling.
    """
    if len(kinds) != len(opinions) or len(kinds) < 2:
        raise ValidationError("kinds and opinions must align and cover at least two agents")
    if any(kind not in (VOLATILE, INTROSPECTIVE) for kind in kinds):
        raise ValidationError("agent kind must be 'volatile' or 'introspective'")
    ids = [f"{kind}{i:03d}" for i, kind in enumerate(kinds)]
    loudness = {VOLATILE: float(loudness_volatile), INTROSPECTIVE: float(loudness_introspective)}
    rng = SplitMix64(seed)
    agents = [
        Agent(agent_id, {"opinion": bool(opinion), "received": [], "history": []}, {}, [_opinion_plan(kind)])
        for agent_id, kind, opinion in zip(ids, kinds, opinions)
    ]
    state: ValueRecord = {
        "announcements": {agent_id: bool(opinion) for agent_id, opinion in zip(ids, opinions)},
        "pending": "",
    }
    return Environment(
        agents,
        state,
        _build_update(ids),
        render=_render,
        state_filter=_build_sampler(ids, kinds, loudness, float(bias), rng),
        rng=rng,
    )


def build_opinion_spread(cfg: OpinionConfig) -> Environment:
    """Society layout from a config: volatile-true, volatile-false,
    introspective-true, introspective-false blocks in registration order."""
    cfg.validate()
    kinds = [VOLATILE] * (cfg.volatile_true + cfg.volatile_false) + [INTROSPECTIVE] * (
        cfg.introspective_true + cfg.introspective_false
    )
    opinions = (
        [True] * cfg.volatile_true
        + [False] * cfg.volatile_false
        + [True] * cfg.introspective_true
        + [False] * cfg.introspective_false
    )
    return build_opinion_env(
        kinds,
        opinions,
        bias=cfg.bias,
        loudness_volatile=cfg.loudness_volatile,
        loudness_introspective=cfg.loudness_introspective,
        seed=cfg.seed,
    )


def opinion_stats(trace: Trace) -> list[ValueRecord]:
    """Per-tick announcement counts: ``{"tick", "trueCount", "falseCount"}``.

    Raises :class:`ShapeError` when the trace does not carry exactly one
    boolean announcement per agent per tick.
    """
    rows: list[ValueRecord] = []
    for record in trace.ticks:
        true_count = 0
        false_count = 0
        for entry in record.per_agent:
            announced = [
                action["announce"]
                for plan_actions in entry.actions
                for action in plan_actions
                if "announce" in action
            ]
            if len(announced) != 1 or not isinstance(announced[0], bool):
                raise ShapeError(
                    f"agent '{entry.agent_id}' did not announce exactly one boolean at tick {record.tick}"
                )
            if announced[0]:
                true_count += 1
            else:
                false_count += 1
        rows.append({"tick": record.tick, "trueCount": true_count, "falseCount": false_count})
    return rows


def opinion_summary(cfg: OpinionConfig) -> ValueRecord:
    """Run the scenario and shape the result for the CLI and the service."""
    env = build_opinion_spread(cfg)
    trace = env.run(cfg.ticks)
    return {"ticks": cfg.ticks, "bias": float(cfg.bias), "seed": cfg.seed, "perTick": opinion_stats(trace)}
