"""Tree values in the JSON data model, the common currency of the library.

Beliefs, environment state, actions, and traces are all built from one value
type: ``None``, booleans, finite numbers, strings, lists, and records (dicts
with non-empty string keys).  Values are treated as immutable once validated;
every operation returns fresh structures and never mutates its inputs.

The canonical text form is UTF-8 JSON with lexicographically sorted keys and
no insignificant whitespace, so structurally equal values serialize to
identical bytes.  Integers are written exactly; floats use the shortest
round-tripping decimal form.
"""

from __future__ import annotations

import json
import math
from typing import TypeAlias, Union

from .errors import ParseError, ValidationError

Value: TypeAlias = Union[None, bool, int, float, str, list["Value"], dict[str, "Value"]]
ValueRecord: TypeAlias = dict[str, "Value"]


def validate_value(value: Value) -> Value:
    """Return ``value`` unchanged if it is a valid tree value.

    Raises :class:`ValidationError` naming the offending path for non-finite
    numbers, cyclic references, empty or non-string record keys, and
    unsupported Python types.
    """
    if _fast_ok(value):
        return value
    _explain(value, "", set())
    raise ValidationError("value failed validation")  # unreachable safeguard


def validate_record(value: Value) -> ValueRecord:
    """Like :func:`validate_value` but additionally requires a record root."""
    if type(value) is not dict:
        raise ValidationError(f"expected a record, got {type(value).__name__}", "")
    validate_value(value)
    return value


_EXIT = object()  # marks "leaving container" frames on the work stack
_isfinite = math.isfinite


def _fast_ok(value: Value) -> bool:
    # Iterative walk without path bookkeeping; the slow pass reruns with
    # full diagnostics only when this one rejects.  Leaves are pushed bare;
    # containers get an (_EXIT, container) frame for cycle bookkeeping.  A
    # genuine tuple in the data falls through to the unsupported-type reject,
    # so it can never be mistaken for an exit frame.
    on_path: set[int] = set()
    work: list = [value]
    pop = work.pop
    push = work.append
    extend = work.extend
    while work:
        v = pop()
        t = type(v)
        if t is bool or t is str or t is int:
            continue
        if t is float:
            if _isfinite(v):
                continue
            return False
        if v is None:
            continue
        if t is list:
            i = id(v)
            if i in on_path:
                return False
            on_path.add(i)
            push((_EXIT, v))
            extend(v)
            continue
        if t is dict:
            i = id(v)
            if i in on_path:
                return False
            on_path.add(i)
            push((_EXIT, v))
            for key in v:
                if type(key) is not str or not key:
                    return False
            extend(v.values())
            continue
        if t is tuple and len(v) == 2 and v[0] is _EXIT:
            on_path.discard(id(v[1]))
            continue
        return False
    return True


def _child(path: str, key: str) -> str:
    return key if not path else f"{path}.{key}"


def _explain(v: Value, path: str, stack: set[int]) -> None:
    t = type(v)
    if t is bool or t is str or t is int or v is None:
        return
    if t is float:
        if not math.isfinite(v):
            raise ValidationError(f"non-finite number {v!r}", path)
        return
    if t is list:
        if id(v) in stack:
            raise ValidationError("cyclic reference", path)
        stack.add(id(v))
        for i, item in enumerate(v):
            _explain(item, f"{path}[{i}]", stack)
        stack.discard(id(v))
        return
    if t is dict:
        if id(v) in stack:
            raise ValidationError("cyclic reference", path)
        stack.add(id(v))
        for key, item in v.items():
            if type(key) is not str:
                raise ValidationError(f"record key {key!r} is not text", path)
            if not key:
                raise ValidationError("empty record key", path)
            _explain(item, _child(path, key), stack)
        stack.discard(id(v))
        return
    raise ValidationError(f"unsupported type {t.__name__}", path)


def shallow_merge(base: ValueRecord, update: ValueRecord) -> ValueRecord:
    """Merge two records one level deep; keys of ``update`` win.

    Nested records are replaced wholesale, never merged recursively.
    """
    if type(base) is not dict:
        raise ValidationError(f"merge base must be a record, got {type(base).__name__}", "")
    if type(update) is not dict:
        raise ValidationError(f"merge update must be a record, got {type(update).__name__}", "")
    return {**base, **update}


def deep_equal(a: Value, b: Value) -> bool:
    """Structural equality: record key order irrelevant, list order significant.

    Booleans never equal numbers; integers and floats compare as numbers
    (``1`` equals ``1.0``).
    """
    if a is None or b is None:
        return a is None and b is None
    ta, tb = type(a), type(b)
    if ta is bool or tb is bool:
        return ta is bool and tb is bool and a == b
    if ta in (int, float) and tb in (int, float):
        return a == b
    if ta is not tb:
        return False
    if ta is str:
        return a == b
    if ta is list:
        return len(a) == len(b) and all(deep_equal(x, y) for x, y in zip(a, b))
    if ta is dict:
        return a.keys() == b.keys() and all(deep_equal(v, b[k]) for k, v in a.items())
    return False


def canonical_dumps(value: Value) -> str:
    """Serialize a validated value to its canonical JSON text."""
    validate_value(value)
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False, allow_nan=False)


def canonical_loads(text: str) -> Value:
    """Parse JSON text and validate the result as a tree value.

    Raises :class:`ParseError` with line/column on malformed text and
    :class:`ValidationError` when the parsed document breaks a value
    invariant (for example an empty object key).
    """
    try:
        parsed = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    return validate_value(parsed)
