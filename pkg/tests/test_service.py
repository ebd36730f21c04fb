from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from agentloop.cli import run_cli
from agentloop.service import app, handle_simulate


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_get_simulate(client):
    response = client.get("/simulation/simulate?ticks=20&bias=5")
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("application/json")
    payload = response.json()
    assert payload["ticks"] == 20 and payload["bias"] == 5.0 and payload["seed"] == 0
    assert len(payload["perTick"]) == 20
    assert all(row["trueCount"] + row["falseCount"] == 100 for row in payload["perTick"])


def test_method_is_ignored(client):
    get = client.get("/simulation/simulate?ticks=3&bias=0")
    post = client.post("/simulation/simulate?ticks=3&bias=0")
    put = client.put("/simulation/simulate?ticks=3&bias=0")
    assert get.status_code == post.status_code == put.status_code == 200
    assert get.text == post.text == put.text


def test_negative_ticks_rejected(client):
    response = client.get("/simulation/simulate?ticks=-1&bias=5")
    assert response.status_code == 400
    assert "ticks" in response.json()["error"]


def test_missing_or_malformed_parameters_rejected(client):
    assert client.get("/simulation/simulate?bias=5").status_code == 400
    assert client.get("/simulation/simulate?ticks=5").status_code == 400
    assert client.get("/simulation/simulate?ticks=abc&bias=1").status_code == 400
    assert client.get("/simulation/simulate?ticks=5&bias=-0.5").status_code == 400
    assert client.get("/simulation/simulate?ticks=5&bias=1&seed=x").status_code == 400


def test_seed_parameter_respected(client):
    first = client.get("/simulation/simulate?ticks=5&bias=1&seed=11").json()
    second = client.get("/simulation/simulate?ticks=5&bias=1&seed=12").json()
    assert first["seed"] == 11 and second["seed"] == 12
    assert first["perTick"] != second["perTick"]


def test_response_matches_cli_stats(client, capsys):
    response = client.get("/simulation/simulate?ticks=12&bias=2.5&seed=9")
    code = run_cli(["run", "--scenario", "opinion", "--ticks", "12", "--bias", "2.5",
                    "--seed", "9", "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    assert response.text == out.strip("\n")
    assert response.json() == json.loads(out)


def test_internal_fault_yields_opaque_500(monkeypatch):
    import agentloop.service as service

    def explode(cfg):
        raise RuntimeError("secret detail")

    monkeypatch.setattr(service, "opinion_summary", explode)
    status, body = handle_simulate({"ticks": "2", "bias": "1"})
    assert status == 500
    assert body == {"error": "internal error"}


def test_handle_simulate_defaults_seed_to_zero():
    status, body = handle_simulate({"ticks": "2", "bias": "1"})
    assert status == 200
    assert body["seed"] == 0
