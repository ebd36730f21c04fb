"""Command-line scenario runner.

``agentloop run`` builds one of the bundled scenarios, runs it for the
requested number of ticks, and emits either the replayed log events
(``--format text``) or canonical JSON (``--format json``): the full trace for
most scenarios, the per-tick announcement counts for the opinion scenario.
JSON output is byte-identical across invocations for the same parameters.

Exit codes: 0 on success, 2 on usage errors (unknown scenario or flag,
invalid configuration), 1 on runtime faults.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .environment import Trace, serialize_trace
from .errors import ValidationError
from .scenarios import (
    SCENARIO_NAMES,
    GolConfig,
    GridWorldConfig,
    OpinionConfig,
    build_game_of_life,
    build_grid_world,
    build_opinion_spread,
    build_room,
    opinion_summary,
)
from .values import canonical_dumps

USAGE_ERROR = 2
RUNTIME_ERROR = 1


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _non_negative(text: str) -> float:
    value = float(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agentloop", description="Run bundled multi-agent scenarios.")
    commands = parser.add_subparsers(dest="command", required=True)
    run = commands.add_parser("run", help="run a scenario and emit its trace or stats")
    run.add_argument("--scenario", required=True, choices=SCENARIO_NAMES)
    run.add_argument("--ticks", type=_natural, default=None, help="iterations to run (default 20)")
    run.add_argument("--seed", type=int, default=None, help="random seed (default 0)")
    run.add_argument("--bias", type=_non_negative, default=None, help="true-announcement bias (opinion only)")
    run.add_argument("--format", choices=("text", "json"), default="text")
    run.add_argument("--out", type=Path, default=None, help="write output to a file instead of stdout")
    run.add_argument("--scenario-config", type=Path, default=None, help="JSON file with the scenario's config record")
    return parser


def _load_config_record(path: Path | None) -> dict:
    if path is None:
        return {}
    try:
        record = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read scenario config {path}: {exc}")
    if not isinstance(record, dict):
        raise ValidationError("scenario config must be a JSON object")
    return record


def _log_lines(trace: Trace) -> str:
    return "\n".join(line for tick in trace.ticks for entry in tick.per_agent for line in entry.log_events)


def _run_scenario(args: argparse.Namespace) -> str:
    if args.bias is not None and args.scenario != "opinion":
        raise ValidationError("--bias only applies to the opinion scenario")
    record = _load_config_record(args.scenario_config)
    if args.ticks is not None:
        record["ticks"] = args.ticks
    if args.seed is not None:
        record["seed"] = args.seed
    if args.bias is not None:
        record["bias"] = args.bias
    record.setdefault("ticks", 20)
    record.setdefault("seed", 0)

    if args.scenario == "opinion":
        cfg = OpinionConfig.from_value(record)
        if args.format == "json":
            return canonical_dumps(opinion_summary(cfg))
        return _log_lines(build_opinion_spread(cfg).run(cfg.ticks))

    if args.scenario == "room":
        extra = sorted(set(record) - {"ticks", "seed"})
        if extra:
            raise ValidationError("unknown room config key", extra[0])
        env, ticks = build_room(), record["ticks"]
    elif args.scenario == "gol":
        cfg = GolConfig.from_value(record)
        env, ticks = build_game_of_life(cfg), cfg.ticks
    else:
        cfg = GridWorldConfig.from_value(record)
        env, ticks = build_grid_world(cfg), cfg.ticks

    trace = env.run(ticks)
    if args.format == "json":
        return serialize_trace(trace)
    return _log_lines(trace)


def _emit(output: str, out_path: Path | None) -> None:
    if out_path is None:
        if output:
            print(output)
        return
    out_path.write_text(output + "\n", encoding="utf-8")


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        output = _run_scenario(args)
    except ValidationError as exc:
        print(f"agentloop: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except Exception as exc:
        print(f"agentloop: runtime fault: {exc}", file=sys.stderr)
        return RUNTIME_ERROR
    try:
        _emit(output, args.out)
    except OSError as exc:
        print(f"agentloop: cannot write output: {exc}", file=sys.stderr)
        return RUNTIME_ERROR
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
