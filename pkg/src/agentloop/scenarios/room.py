"""Door-lock negotiation between three belief-plan agents in a shared room.

A porter locks or unlocks the door on request; a paranoid agent wants it
locked and a claustrophobe wants it open.  All three start believing the door
is locked and that nobody has requested a change.  The run settles into a
period-2 cycle from the first tick: the door is unlocked after odd ticks and
locked again after even ticks.
"""

from __future__ import annotations

from ..agent import Agent, Belief, Plan
from ..environment import Environment
from ..values import ValueRecord


def _initial_beliefs() -> ValueRecord:
    return {**Belief("door", {"locked": True}), **Belief("requests", [])}


def _porter_plans() -> list[Plan]:
    return [
        Plan(
            lambda b, _: not b["door"]["locked"] and "lock" in b["requests"],
            lambda _: [{"door": "lock"}],
        ),
        Plan(
            lambda b, _: b["door"]["locked"] and "unlock" in b["requests"],
            lambda _: [{"door": "unlock"}],
        ),
    ]


def _paranoid_plans() -> list[Plan]:
    return [
        Plan(lambda b, _: not b["door"]["locked"], lambda _: [{"request": "lock"}]),
        Plan(lambda b, _: b["door"]["locked"], lambda _: [{"announce": "Thanks for locking the door!"}]),
    ]


def _claustrophobe_plans() -> list[Plan]:
    return [
        Plan(lambda b, _: b["door"]["locked"], lambda _: [{"request": "unlock"}]),
        Plan(lambda b, _: not b["door"]["locked"], lambda _: [{"announce": "Thanks for unlocking the door!"}]),
    ]


def update_room(actions, agent_id, current_state):
    """Apply door and request actions; announcements only produce log events."""
    logs: list[str] = []
    update: ValueRecord = {"requests": list(current_state["requests"])}
    for plan_actions in actions:
        if any(action.get("door") == "lock" for action in plan_actions):
            update["door"] = {"locked": True}
            update["requests"] = []
            logs.append(f"{agent_id}: Lock door")
        if any(action.get("door") == "unlock" for action in plan_actions):
            update["door"] = {"locked": False}
            update["requests"] = []
            logs.append(f"{agent_id}: Unlock door")
        if any(action.get("request") == "lock" for action in plan_actions):
            update["requests"] = update["requests"] + ["lock"]
            logs.append(f"{agent_id}: Request: lock door")
        if any(action.get("request") == "unlock" for action in plan_actions):
            update["requests"] = update["requests"] + ["unlock"]
            logs.append(f"{agent_id}: Request: unlock door")
        announcement = next((action["announce"] for action in plan_actions if "announce" in action), None)
        if announcement is not None:
            logs.append(f"{agent_id}: {announcement}")
    return update, logs


def build_room() -> Environment:
    """The three-agent room, door initially locked, fully observable."""
    paranoid = Agent("paranoid", _initial_beliefs(), {}, _paranoid_plans())
    claustrophobe = Agent("claustrophobe", _initial_beliefs(), {}, _claustrophobe_plans())
    porter = Agent("porter", _initial_beliefs(), {}, _porter_plans())
    state: ValueRecord = {"door": {"locked": True}, "requests": []}
    return Environment([paranoid, claustrophobe, porter], state, update_room)
