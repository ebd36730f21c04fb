"""Exception types shared across the package."""

from __future__ import annotations


class ValidationError(ValueError):
    """A value, configuration, or constructor argument violates an invariant.

    ``path`` locates the offending node for tree-shaped inputs: ``""`` for the
    root, dotted keys and bracketed indices for nested nodes (``"door.locked"``,
    ``"requests[2]"``).
    """

    def __init__(self, message: str, path: str | None = None):
        self.path = path
        super().__init__(message if path is None else f"{message} (at '{path}')")


class ParseError(ValueError):
    """Malformed serialized input; carries the 1-based line and column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ShapeError(ValueError):
    """A trace or record does not have the layout an analysis expects."""


class AgentFault(RuntimeError):
    """A desire body, preference function, plan head, or plan body raised.

    Tagged with the agent id and, when the failure happened inside a plan,
    the plan's position in declaration order.  The original exception is kept
    as ``__cause__``.  When an environment halts on a fault, the partially
    built tick record is attached as ``partial_record``.
    """

    def __init__(self, agent_id: str, phase: str, plan_index: int | None, cause: BaseException):
        self.agent_id = agent_id
        self.phase = phase
        self.plan_index = plan_index
        self.partial_record = None
        where = phase if plan_index is None else f"{phase} of plan {plan_index}"
        super().__init__(f"agent '{agent_id}': {where} raised {cause!r}")
        self.__cause__ = cause


class UnknownAgentError(LookupError):
    """An operation referenced an agent id that is not part of the world."""


class InvalidDirectionError(ValueError):
    """A move named a direction outside N, S, E, W."""
