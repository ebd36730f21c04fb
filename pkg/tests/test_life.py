from __future__ import annotations

import pytest

from agentloop import ValidationError
from agentloop.scenarios import GolConfig, build_game_of_life, conway_oracle, random_grid


def cells(grid):
    return {(x, y) for y, row in enumerate(grid) for x, cell in enumerate(row) if cell}


def grid_of(width, height, alive):
    return [[(x, y) in alive for x in range(width)] for y in range(height)]


GLIDER = {(1, 0), (2, 1), (0, 2), (1, 2), (2, 2)}


class TestConwayOracle:
    def test_empty_grid_stays_empty(self):
        assert conway_oracle([]) == []
        assert cells(conway_oracle(grid_of(4, 4, set()))) == set()

    def test_single_cell_dies(self):
        assert cells(conway_oracle(grid_of(3, 3, {(1, 1)}))) == set()

    def test_block_is_still_life(self):
        block = {(1, 1), (2, 1), (1, 2), (2, 2)}
        assert cells(conway_oracle(grid_of(4, 4, block))) == block

    def test_blinker_oscillates(self):
        vertical = {(2, 1), (2, 2), (2, 3)}
        horizontal = {(1, 2), (2, 2), (3, 2)}
        once = conway_oracle(grid_of(5, 5, vertical))
        assert cells(once) == horizontal
        assert cells(conway_oracle(once)) == vertical

    def test_glider_translates_in_four_steps(self):
        grid = grid_of(10, 10, GLIDER)
        for _ in range(4):
            grid = conway_oracle(grid)
        assert cells(grid) == {(x + 1, y + 1) for x, y in GLIDER}

    def test_ragged_grid_rejected(self):
        with pytest.raises(ValidationError):
            conway_oracle([[True, False], [True]])


class TestConfig:
    def test_out_of_bounds_cell_rejected(self):
        with pytest.raises(ValidationError):
            GolConfig(width=3, height=3, alive_cells=((5, 0),)).validate()

    def test_alive_cells_and_density_exclusive(self):
        with pytest.raises(ValidationError):
            GolConfig(alive_cells=((0, 0),), density=0.5).validate()

    def test_from_value_rejects_unknown_keys(self):
        with pytest.raises(ValidationError):
            GolConfig.from_value({"wdith": 3})

    def test_random_grid_is_seed_deterministic(self):
        assert random_grid(8, 8, 0.4, seed=5) == random_grid(8, 8, 0.4, seed=5)
        assert random_grid(8, 8, 0.4, seed=5) != random_grid(8, 8, 0.4, seed=6)


class TestAgentBoard:
    def test_blinker_after_one_tick(self):
        cfg = GolConfig(width=5, height=5, alive_cells=((2, 1), (2, 2), (2, 3)))
        record = build_game_of_life(cfg).tick()
        assert cells(record.state_after["grid"]) == {(1, 2), (2, 2), (3, 2)}

    def test_block_never_changes(self):
        block = ((1, 1), (2, 1), (1, 2), (2, 2))
        env = build_game_of_life(GolConfig(width=4, height=4, alive_cells=block))
        trace = env.run(5)
        for record in trace.ticks:
            assert cells(record.state_after["grid"]) == set(block)

    def test_partial_observability(self):
        cfg = GolConfig(width=3, height=3, alive_cells=((0, 0), (1, 0)))
        record = build_game_of_life(cfg).tick()
        for entry in record.per_agent:
            assert set(entry.perceived_update) == {"active", "liveNeighbors"}

    def test_matches_oracle_on_random_board(self):
        grid = random_grid(12, 12, 0.4, seed=11)
        alive = tuple(sorted(cells(grid)))
        env = build_game_of_life(GolConfig(width=12, height=12, alive_cells=alive))
        expected = [row[:] for row in grid]
        for _ in range(20):
            record = env.tick()
            expected = conway_oracle(expected)
            assert record.state_after["grid"] == expected

    def test_render_draws_the_board(self):
        cfg = GolConfig(width=3, height=2, alive_cells=((0, 0), (2, 1)))
        record = build_game_of_life(cfg).tick()
        assert all(len(line) == 3 for line in record.render_lines)
        assert len(record.render_lines) == 2
