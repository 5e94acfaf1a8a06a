"""Deterministic random sequence built on the SplitMix64 mixing function.

The stream depends only on the integers it is keyed with, never on the
platform generator, so generated instances are identical everywhere.
"""
from fractions import Fraction
from typing import Union

from .references import short_id_of

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def splitmix64(x: int) -> int:
    """One SplitMix64 step from state x: the output that follows x."""
    return mix64((x + GOLDEN_GAMMA) & MASK64)


class Rand:
    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    @classmethod
    def for_cell(cls, seed: int, *keys: Union[int, str]) -> "Rand":
        state = splitmix64(seed & MASK64)
        for key in keys:
            k = short_id_of(key) if isinstance(key, str) else key & MASK64
            state = splitmix64(state ^ k)
        return cls(state)

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]; modulo bias is below 2^-40 for our ranges."""
        return lo + self.next_u64() % (hi - lo + 1)

    def rational(self, bound: int) -> Fraction:
        return Fraction(self.randint(-bound, bound), self.randint(1, bound))

    def nonzero_rational(self, bound: int) -> Fraction:
        while True:
            value = self.rational(bound)
            if value != 0:
                return value
