"""Seeded random value trees for deterministic bulk property checks."""

from __future__ import annotations

from agentloop import SplitMix64

_KEYS = ("alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta")


def random_value(rng: SplitMix64, depth: int = 0):
    kind = rng.randrange(8 if depth < 3 else 6)
    if kind == 0:
        return None
    if kind == 1:
        return rng.randrange(2) == 1
    if kind == 2:
        return rng.randrange(2001) - 1000
    if kind == 3:
        return (rng.next_float() - 0.5) * 1e6
    if kind in (4, 5):
        return _KEYS[rng.randrange(len(_KEYS))] + str(rng.randrange(100))
    if kind == 6:
        return [random_value(rng, depth + 1) for _ in range(rng.randrange(4))]
    return random_record(rng, depth + 1)


def random_record(rng: SplitMix64, depth: int = 0):
    keys = {_KEYS[rng.randrange(len(_KEYS))] for _ in range(rng.randrange(5))}
    return {key: random_value(rng, depth + 1) for key in keys}
