from __future__ import annotations

import json

from agentloop.cli import run_cli


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_room_text_emits_sixty_log_lines(capsys):
    code, out, _ = run(capsys, "run", "--scenario", "room", "--ticks", "20", "--format", "text")
    assert code == 0
    lines = out.strip("\n").split("\n")
    assert len(lines) == 60
    assert lines[0] == "paranoid: Thanks for locking the door!"
    assert lines[-1] == "porter: Lock door"


def test_opinion_zero_ticks(capsys):
    code, out, _ = run(capsys, "run", "--scenario", "opinion", "--ticks", "0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["perTick"] == []
    assert payload["seed"] == 0


def test_unknown_scenario_is_usage_error(capsys):
    code, _, _ = run(capsys, "run", "--scenario", "bogus")
    assert code == 2


def test_negative_ticks_is_usage_error(capsys):
    code, _, _ = run(capsys, "run", "--scenario", "room", "--ticks", "-3")
    assert code == 2


def test_unknown_flag_is_usage_error(capsys):
    code, _, _ = run(capsys, "run", "--scenario", "room", "--frobnicate")
    assert code == 2


def test_bias_restricted_to_opinion(capsys):
    code, _, err = run(capsys, "run", "--scenario", "room", "--bias", "2")
    assert code == 2
    assert "bias" in err


def test_json_output_byte_identical_across_invocations(capsys):
    args = ("run", "--scenario", "opinion", "--ticks", "10", "--seed", "7", "--bias", "3", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_seed_echoed_in_json(capsys):
    code, out, _ = run(capsys, "run", "--scenario", "opinion", "--ticks", "1", "--seed", "123",
                       "--bias", "0", "--format", "json")
    assert code == 0
    assert json.loads(out)["seed"] == 123


def test_trace_output_parses_for_gol(capsys):
    code, out, _ = run(capsys, "run", "--scenario", "gol", "--ticks", "3", "--seed", "2", "--format", "json")
    assert code == 0
    trace = json.loads(out)
    assert trace["seed"] == 2
    assert [t["tick"] for t in trace["ticks"]] == [1, 2, 3]


def test_gridworld_runs_with_default_map(capsys):
    code, out, _ = run(capsys, "run", "--scenario", "gridworld", "--ticks", "5", "--seed", "4", "--format", "json")
    assert code == 0
    assert len(json.loads(out)["ticks"]) == 5


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "trace.json"
    code, out, _ = run(capsys, "run", "--scenario", "room", "--ticks", "2", "--format", "json",
                       "--out", str(target))
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text(encoding="utf-8"))
    assert len(payload["ticks"]) == 2


def test_scenario_config_file(tmp_path, capsys):
    config = tmp_path / "opinion.json"
    config.write_text(json.dumps({
        "agentCount": 10, "volatileTrue": 3, "volatileFalse": 2,
        "introspectiveTrue": 2, "introspectiveFalse": 3, "bias": 1.0,
    }))
    code, out, _ = run(capsys, "run", "--scenario", "opinion", "--ticks", "4",
                       "--scenario-config", str(config), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert all(row["trueCount"] + row["falseCount"] == 10 for row in payload["perTick"])


def test_bad_config_file_is_usage_error(tmp_path, capsys):
    config = tmp_path / "bad.json"
    config.write_text('{"agentCount": 5}')  # counts no longer sum
    code, _, err = run(capsys, "run", "--scenario", "opinion", "--scenario-config", str(config))
    assert code == 2
    assert "sum" in err


def test_runtime_fault_exits_one(monkeypatch, capsys):
    import agentloop.cli as cli

    def explode():
        raise RuntimeError("wiring failure")

    monkeypatch.setattr(cli, "build_room", explode)
    code, _, err = run(capsys, "run", "--scenario", "room", "--ticks", "1")
    assert code == 1
    assert "runtime fault" in err
