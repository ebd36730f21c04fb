from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agentloop import (
    ParseError,
    ValidationError,
    canonical_dumps,
    canonical_loads,
    deep_equal,
    shallow_merge,
    validate_record,
    validate_value,
)

leaves = (
    st.none()
    | st.booleans()
    | st.integers(-(10**6), 10**6)
    | st.floats(allow_nan=False, allow_infinity=False, width=64)
    | st.text(max_size=8)
)
values = st.recursive(
    leaves,
    lambda children: st.lists(children, max_size=4)
    | st.dictionaries(st.text(min_size=1, max_size=6), children, max_size=4),
    max_leaves=12,
)
records = st.dictionaries(st.text(min_size=1, max_size=6), values, max_size=6)


class TestShallowMerge:
    def test_identity_update(self):
        assert shallow_merge({"a": 1}, {}) == {"a": 1}

    def test_key_overwrite(self):
        merged = shallow_merge({"door": {"locked": True}, "requests": []}, {"door": {"locked": False}})
        assert merged == {"door": {"locked": False}, "requests": []}

    def test_nested_records_replaced_wholesale(self):
        assert shallow_merge({"a": {"x": 1, "y": 2}}, {"a": {"x": 9}}) == {"a": {"x": 9}}

    def test_non_record_inputs_rejected(self):
        with pytest.raises(ValidationError):
            shallow_merge([], {})
        with pytest.raises(ValidationError):
            shallow_merge({}, "nope")

    @given(records)
    def test_empty_update_is_identity(self, record):
        assert deep_equal(shallow_merge(record, {}), record)
        assert deep_equal(shallow_merge({}, record), record)

    @given(records, records)
    def test_key_union_and_right_bias(self, base, update):
        merged = shallow_merge(base, update)
        assert set(merged) == set(base) | set(update)
        for key in update:
            assert merged[key] is update[key]
        for key in set(base) - set(update):
            assert merged[key] is base[key]

    @given(records, records, records)
    def test_associative_on_disjoint_updates(self, a, b, c):
        b = {f"b.{key}": value for key, value in b.items()}
        c = {f"c.{key}": value for key, value in c.items()}
        left = shallow_merge(shallow_merge(a, b), c)
        right = shallow_merge(a, shallow_merge(b, c))
        assert deep_equal(left, right)


class TestDeepEqual:
    def test_list_order_significant(self):
        assert deep_equal({"x": [1, 2]}, {"x": [1, 2]})
        assert not deep_equal({"x": [1, 2]}, {"x": [2, 1]})

    def test_record_key_order_irrelevant(self):
        assert deep_equal({"a": 1, "b": 2}, {"b": 2, "a": 1})

    def test_bool_is_not_a_number(self):
        assert not deep_equal(True, 1)
        assert not deep_equal({"a": False}, {"a": 0})

    def test_int_and_float_compare_as_numbers(self):
        assert deep_equal(1, 1.0)
        assert deep_equal({"n": [2.0]}, {"n": [2]})

    def test_mismatched_kinds(self):
        assert not deep_equal(None, 0)
        assert not deep_equal("1", 1)
        assert not deep_equal([], {})

    @given(values)
    def test_reflexive(self, value):
        assert deep_equal(value, value)

    @given(values, values)
    def test_symmetric(self, a, b):
        assert deep_equal(a, b) == deep_equal(b, a)


class TestValidate:
    def test_accepts_tutorial_belief_body(self):
        assert validate_value({"locked": True}) == {"locked": True}

    def test_nan_named_with_path(self):
        with pytest.raises(ValidationError) as exc:
            validate_value({"x": float("nan")})
        assert exc.value.path == "x"

    def test_infinity_rejected(self):
        with pytest.raises(ValidationError):
            validate_value({"deep": [1.0, {"y": math.inf}]})

    def test_cycle_rejected(self):
        looped: dict = {"a": 1}
        looped["self"] = looped
        with pytest.raises(ValidationError, match="cycl"):
            validate_value(looped)

    def test_list_cycle_rejected(self):
        looped: list = [1]
        looped.append(looped)
        with pytest.raises(ValidationError, match="cycl"):
            validate_value({"items": looped})

    def test_shared_subtree_is_fine(self):
        shared = {"x": 1}
        assert validate_value({"a": shared, "b": shared})

    def test_empty_key_rejected(self):
        with pytest.raises(ValidationError, match="empty"):
            validate_value({"": 1})

    def test_non_string_key_rejected(self):
        with pytest.raises(ValidationError):
            validate_value({1: "x"})

    def test_unsupported_type_rejected(self):
        with pytest.raises(ValidationError, match="tuple"):
            validate_value({"pos": (1, 2)})
        with pytest.raises(ValidationError, match="set"):
            validate_value({"s": {1, 2}})

    def test_validate_record_requires_record_root(self):
        with pytest.raises(ValidationError):
            validate_record([1, 2])
        assert validate_record({"ok": None}) == {"ok": None}

    def test_nested_path_reported(self):
        with pytest.raises(ValidationError) as exc:
            validate_value({"a": {"b": [1, float("inf")]}})
        assert exc.value.path == "a.b[1]"


class TestCanonicalJson:
    def test_sorted_compact_form(self):
        assert canonical_dumps({"b": 1, "a": [True, None]}) == '{"a":[true,null],"b":1}'

    def test_utf8_not_escaped(self):
        assert canonical_dumps({"name": "Umeå"}) == '{"name":"Umeå"}'

    def test_big_integers_round_trip_exactly(self):
        value = {"seed": 2**63 + 3}
        assert canonical_loads(canonical_dumps(value)) == value

    def test_parse_error_carries_position(self):
        with pytest.raises(ParseError) as exc:
            canonical_loads("{")
        assert exc.value.line == 1 and exc.value.column >= 1

    def test_loads_rejects_invalid_values(self):
        with pytest.raises(ValidationError):
            canonical_loads('{"": 1}')

    @settings(max_examples=200)
    @given(values)
    def test_round_trip(self, value):
        assert deep_equal(canonical_loads(canonical_dumps(value)), value)
