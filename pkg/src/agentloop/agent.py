"""Reasoning-loop agents: beliefs, desires, intentions, and plans.

An agent's ``next`` cycle is synchronous and open-minded: the environment's
belief update is merged in, intentions are recomputed from scratch from the
current beliefs (no commitment survives a cycle), and plans run in declaration
order.  Three loop variants are supported, selected by ``ReasoningMode``:

* belief-plan — desires are ignored and plan heads receive an empty
  intention list;
* belief-desire-plan — every desire becomes an intention (the default
  preference function), so heads effectively see desire values;
* belief-desire-intention-plan — a custom preference function generator may
  filter desires into intentions.

Beliefs and desires compose as plain records, so agent definitions stay close
to the data they manipulate::

    beliefs = {**Belief("door", {"locked": True}), **Belief("requests", [])}
    porter = Agent("porter", beliefs, {}, plans)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .errors import AgentFault, ValidationError
from .values import Value, ValueRecord, shallow_merge, validate_record, validate_value

BeliefMap = ValueRecord
DesireBody = Callable[[BeliefMap], Value]
DesireMap = dict[str, DesireBody]
ActionRecord = ValueRecord
Intention = ValueRecord  # {"id": str, "value": Value}
IntentionList = list[Intention]


class ReasoningMode(Enum):
    BELIEF_PLAN = "belief-plan"
    BELIEF_DESIRE_PLAN = "belief-desire-plan"
    BELIEF_DESIRE_INTENTION_PLAN = "belief-desire-intention-plan"


def Belief(belief_id: str, value: Value) -> BeliefMap:
    """Single-entry belief map ``{belief_id: value}``, composable by record union."""
    if not isinstance(belief_id, str) or not belief_id:
        raise ValidationError("belief id must be non-empty text")
    validate_value(value)
    return {belief_id: value}


def Desire(desire_id: str, body: DesireBody) -> DesireMap:
    """Single-entry desire map ``{desire_id: body}``.

    The body computes the desire's value from the agent's current beliefs and
    is expected to be pure.
    """
    if not isinstance(desire_id, str) or not desire_id:
        raise ValidationError("desire id must be non-empty text")
    if not callable(body):
        raise ValidationError(f"desire '{desire_id}' body must be callable")
    return {desire_id: body}


@dataclass(frozen=True)
class PlanResult:
    """What a plan body produced: actions to issue and an optional belief update."""

    actions: list[ActionRecord] = field(default_factory=list)
    belief_update: BeliefMap | None = None


class Plan:
    """Activation condition plus body.

    ``head(beliefs, intentions)`` decides whether the plan runs this cycle;
    in belief-plan mode ``intentions`` is always empty.  ``body(beliefs)``
    returns the actions to issue — either a bare list of action records or a
    :class:`PlanResult` when the plan also updates beliefs.  Both functions
    are expected to be pure; purity is a documented contract, not enforced.
    """

    __slots__ = ("head", "body")

    def __init__(self, head: Callable[[BeliefMap, IntentionList], bool], body: Callable[[BeliefMap], object]):
        if not callable(head):
            raise ValidationError("plan head must be callable")
        if not callable(body):
            raise ValidationError("plan body must be callable")
        self.head = head
        self.body = body


def default_preferences(beliefs: BeliefMap, desires: DesireMap) -> IntentionList:
    """Turn every desire into an intention.

    One intention per desire, ordered lexicographically by desire id, with
    the value the desire body computes from the current beliefs.
    """
    return [{"id": desire_id, "value": desires[desire_id](beliefs)} for desire_id in sorted(desires)]


def default_preference_function_generator(beliefs: BeliefMap, desires: DesireMap) -> Callable[[], IntentionList]:
    """Default generator: defer to :func:`default_preferences`."""
    return lambda: default_preferences(beliefs, desires)


def _normalize_plan_result(result: object) -> PlanResult:
    if result is None:
        return PlanResult()
    if isinstance(result, PlanResult):
        return result
    if isinstance(result, list):
        return PlanResult(actions=result)
    raise ValidationError(f"plan body must return a list of actions or a PlanResult, got {type(result).__name__}")


class Agent:
    """A self-contained reasoning state machine.

    The agent owns its belief map; its only outputs are the action lists
    returned by :meth:`next`.  Not safe for concurrent mutation, safe to hand
    over between threads whole.
    """

    def __init__(
        self,
        agent_id: str,
        beliefs: BeliefMap,
        desires: DesireMap | None = None,
        plans: list[Plan] | None = None,
        preference_function_generator: Callable[[BeliefMap, DesireMap], Callable[[], IntentionList]] | None = None,
        mode: ReasoningMode | None = None,
    ):
        if not isinstance(agent_id, str) or not agent_id:
            raise ValidationError("agent id must be non-empty text")
        validate_record(beliefs)
        desires = dict(desires) if desires else {}
        for desire_id, body in desires.items():
            if not isinstance(desire_id, str) or not desire_id:
                raise ValidationError("desire id must be non-empty text")
            if not callable(body):
                raise ValidationError(f"desire '{desire_id}' body must be callable")
        plans = list(plans) if plans else []
        for plan in plans:
            if not isinstance(plan, Plan):
                raise ValidationError("plans must be Plan instances")
        if len({id(plan) for plan in plans}) != len(plans):
            raise ValidationError("the same Plan object appears twice in the plan list")
        if mode is None:
            mode = ReasoningMode.BELIEF_PLAN if not desires else ReasoningMode.BELIEF_DESIRE_INTENTION_PLAN

        self.id = agent_id
        self.beliefs: BeliefMap = dict(beliefs)
        self.desires = desires
        self.plans = plans
        self.preference_function_generator = preference_function_generator
        self.mode = mode

    def _intentions(self) -> IntentionList:
        if self.mode is ReasoningMode.BELIEF_PLAN:
            return []
        generator = default_preference_function_generator
        if self.mode is ReasoningMode.BELIEF_DESIRE_INTENTION_PLAN and self.preference_function_generator is not None:
            generator = self.preference_function_generator
        try:
            intentions = generator(self.beliefs, self.desires)()
        except Exception as exc:
            raise AgentFault(self.id, "preference function", None, exc) from exc
        if not isinstance(intentions, list):
            raise AgentFault(
                self.id, "preference function", None, ValidationError("preference function must return a list")
            )
        for intention in intentions:
            if not isinstance(intention, dict) or not isinstance(intention.get("id"), str):
                raise AgentFault(
                    self.id, "preference function", None, ValidationError("intentions must be {'id', 'value'} records")
                )
            if intention["id"] not in self.desires:
                raise AgentFault(
                    self.id,
                    "preference function",
                    None,
                    ValidationError(f"intention id '{intention['id']}' matches no desire"),
                )
        return intentions

    def next(self, belief_update: ValueRecord) -> list[list[ActionRecord]]:
        """Run one reasoning cycle against an environment-supplied belief update.

        Returns the per-plan action lists of the plans whose heads fired, in
        declaration order.  A plan's belief update is merged immediately, so
        later heads and bodies in the same cycle see it.  Failures inside
        desire bodies, the preference function, plan heads, or plan bodies are
        wrapped in :class:`AgentFault`.
        """
        validate_record(belief_update)
        self.beliefs = shallow_merge(self.beliefs, belief_update)
        intentions = self._intentions()

        issued: list[list[ActionRecord]] = []
        for index, plan in enumerate(self.plans):
            try:
                active = bool(plan.head(self.beliefs, intentions))
            except Exception as exc:
                raise AgentFault(self.id, "head", index, exc) from exc
            if not active:
                continue
            try:
                result = _normalize_plan_result(plan.body(self.beliefs))
            except Exception as exc:
                raise AgentFault(self.id, "body", index, exc) from exc
            try:
                if any(not isinstance(action, dict) or not action for action in result.actions):
                    raise ValidationError("actions must be non-empty records")
                validate_value(result.actions)
                if result.belief_update is not None:
                    validate_record(result.belief_update)
            except ValidationError as exc:
                raise AgentFault(self.id, "body", index, exc) from exc
            if result.belief_update is not None:
                self.beliefs = shallow_merge(self.beliefs, result.belief_update)
            issued.append(result.actions)
        return issued
