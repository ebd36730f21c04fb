"""agentloop — lean belief-desire-intention agents with a synchronous loop.

The library keeps agent programming close to ordinary Python: beliefs,
state, and actions are plain JSON-model values; desires, plan heads, and
plan bodies are plain functions.  An :class:`Environment` runs its agents in
a deterministic tick loop and records everything in a serializable trace.

Quick start::

    from agentloop import Agent, Belief, Environment, Plan

    beliefs = {**Belief("door", {"locked": True}), **Belief("requests", [])}
    porter = Agent("porter", beliefs, {}, [
        Plan(lambda b, _: b["door"]["locked"] and "unlock" in b["requests"],
             lambda _: [{"door": "unlock"}]),
    ])

    def update(actions, agent_id, state):
        ...  # fold the actions into a state update record

    env = Environment([porter], {"door": {"locked": True}, "requests": []}, update)
    trace = env.run(20)
"""

from .agent import (
    Agent,
    Belief,
    Desire,
    Plan,
    PlanResult,
    ReasoningMode,
    default_preference_function_generator,
    default_preferences,
)
from .environment import (
    AgentTickRecord,
    Environment,
    FaultPolicy,
    TickRecord,
    Trace,
    default_render,
    default_state_filter,
    deserialize_trace,
    serialize_trace,
)
from .errors import (
    AgentFault,
    InvalidDirectionError,
    ParseError,
    ShapeError,
    UnknownAgentError,
    ValidationError,
)
from .rng import SplitMix64
from .values import (
    Value,
    ValueRecord,
    canonical_dumps,
    canonical_loads,
    deep_equal,
    shallow_merge,
    validate_record,
    validate_value,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Agent",
    "AgentFault",
    "AgentTickRecord",
    "Belief",
    "Desire",
    "Environment",
    "FaultPolicy",
    "InvalidDirectionError",
    "ParseError",
    "Plan",
    "PlanResult",
    "ReasoningMode",
    "ShapeError",
    "SplitMix64",
    "TickRecord",
    "Trace",
    "UnknownAgentError",
    "ValidationError",
    "Value",
    "ValueRecord",
    "canonical_dumps",
    "canonical_loads",
    "deep_equal",
    "default_preference_function_generator",
    "default_preferences",
    "default_render",
    "default_state_filter",
    "deserialize_trace",
    "serialize_trace",
    "shallow_merge",
    "validate_record",
    "validate_value",
]
