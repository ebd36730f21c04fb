"""Deterministic 64-bit random source.

The SplitMix64 generator is the single randomness authority for stochastic
scenarios: identical seeds produce identical streams on every platform, which
keeps traces reproducible byte for byte.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """SplitMix64 generator; the construction seed is kept for trace metadata."""

    __slots__ = ("seed", "_state")

    def __init__(self, seed: int = 0):
        self.seed = int(seed) & _MASK
        self._state = self.seed

    def next_uint64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform double in [0, 1) built from the top 53 bits."""
        return (self.next_uint64() >> 11) * 2.0**-53

    def randrange(self, bound: int) -> int:
        """Integer in [0, bound); plain modulo reduction, bias is negligible
        for the small bounds used here."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_uint64() % bound
