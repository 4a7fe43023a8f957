"""Deterministic 64-bit stream used for every randomized check.

splitmix64 with pure integer arithmetic: the same seed produces the
same stream on every platform, so randomized test corpora are
reproducible bit for bit.  Coefficients are drawn in [-9, 9] via
``value % 19 - 9``.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def coefficient(self) -> int:
        """Integer in [-9, 9]."""
        return self.next_u64() % 19 - 9

    def nonzero_coefficient(self) -> int:
        """Integer in [-9, -1] or [1, 9]."""
        z = self.next_u64() % 18
        return z - 9 if z < 9 else z - 8

    def pick(self, n: int) -> int:
        """Index in [0, n)."""
        if n <= 0:
            raise ValueError("empty range")
        return self.next_u64() % n
