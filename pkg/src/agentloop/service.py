"""HTTP endpoint exposing the opinion-spread simulation.

``/simulation/simulate`` accepts any request method — the handler ignores it —
and reads three query parameters: ``ticks`` (required, non-negative integer),
``bias`` (required, non-negative number), and ``seed`` (optional integer,
default 0).  It runs the simulation and answers with canonical JSON::

    {"bias": 5.0, "perTick": [{"falseCount": 38, "tick": 1, "trueCount": 62}, ...],
     "seed": 0, "ticks": 2}

Bad parameters yield a 400 with an error record; unexpected failures yield a
500 whose details are logged, never leaked.  Each request runs its own
environment instance, so concurrent requests share no mutable state.

Run it with any ASGI server, e.g. ``uvicorn agentloop.service:app``.
"""

from __future__ import annotations

import logging
from typing import Mapping

from fastapi import FastAPI, Request, Response

from .scenarios import OpinionConfig, opinion_summary
from .values import ValueRecord, canonical_dumps

logger = logging.getLogger(__name__)

_METHODS = ["GET", "POST", "PUT", "DELETE", "PATCH", "OPTIONS", "HEAD"]


class _BadParameter(ValueError):
    pass


def _require_natural(params: Mapping[str, str], name: str) -> int:
    raw = params.get(name)
    if raw is None:
        raise _BadParameter(f"missing query parameter '{name}'")
    try:
        value = int(raw)
    except ValueError:
        raise _BadParameter(f"'{name}' must be an integer, got {raw!r}")
    if value < 0:
        raise _BadParameter(f"'{name}' must be non-negative, got {value}")
    return value


def _require_non_negative(params: Mapping[str, str], name: str) -> float:
    raw = params.get(name)
    if raw is None:
        raise _BadParameter(f"missing query parameter '{name}'")
    try:
        value = float(raw)
    except ValueError:
        raise _BadParameter(f"'{name}' must be a number, got {raw!r}")
    if not value >= 0:
        raise _BadParameter(f"'{name}' must be non-negative, got {raw!r}")
    return value


def _optional_int(params: Mapping[str, str], name: str, default: int) -> int:
    raw = params.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise _BadParameter(f"'{name}' must be an integer, got {raw!r}")


def handle_simulate(params: Mapping[str, str]) -> tuple[int, ValueRecord]:
    """Pure request handler: query parameters in, (status, body record) out."""
    try:
        ticks = _require_natural(params, "ticks")
        bias = _require_non_negative(params, "bias")
        seed = _optional_int(params, "seed", 0)
    except _BadParameter as exc:
        return 400, {"error": str(exc)}
    try:
        cfg = OpinionConfig(ticks=ticks, bias=bias, seed=seed)
        return 200, opinion_summary(cfg)
    except Exception:
        logger.exception("simulation failed for ticks=%s bias=%s seed=%s", ticks, bias, seed)
        return 500, {"error": "internal error"}


app = FastAPI(title="agentloop simulation service")


@app.api_route("/simulation/simulate", methods=_METHODS)
async def simulate(request: Request) -> Response:
    status, body = handle_simulate(request.query_params)
    return Response(content=canonical_dumps(body), status_code=status, media_type="application/json")
