"""Bundled demonstration scenarios and their configuration schemas."""

from .gridworld import (
    GridWorldConfig,
    build_grid_world,
    default_grid_world_config,
    resolve_move,
)
from .life import GolConfig, build_game_of_life, conway_oracle, random_grid
from .opinion import (
    OpinionConfig,
    build_opinion_env,
    build_opinion_spread,
    opinion_stats,
    opinion_summary,
)
from .room import build_room

SCENARIO_NAMES = ("gol", "gridworld", "opinion", "room")

__all__ = [
    "SCENARIO_NAMES",
    "GridWorldConfig",
    "GolConfig",
    "OpinionConfig",
    "build_game_of_life",
    "build_grid_world",
    "build_opinion_env",
    "build_opinion_spread",
    "build_room",
    "conway_oracle",
    "default_grid_world_config",
    "opinion_stats",
    "opinion_summary",
    "random_grid",
    "resolve_move",
]
