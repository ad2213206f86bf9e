"""Deterministic, splittable random streams built on SplitMix64.

SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
generators") is counter-based: output i is a bijective mix of
``key + i * GAMMA`` mod 2^64, so streams are reproducible bit-for-bit on
any platform and never share state. Stream keys are derived by hashing a
label path, e.g. ``("tsp", "easy", 42, "generate")``, which gives every
(task, difficulty, seed, purpose) its own independent stream.
"""
from __future__ import annotations

import hashlib

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def derive_key(*parts: object) -> int:
    """Hash a label path into a 64-bit stream key."""
    material = "\x1f".join(str(p) for p in parts).encode("utf-8")
    return int.from_bytes(hashlib.sha256(material).digest()[:8], "big")


class SplitMix64:
    """One random stream. Construct via :meth:`from_parts` for keyed streams."""

    __slots__ = ("_state",)

    def __init__(self, key: int):
        self._state = key & _MASK64

    @classmethod
    def from_parts(cls, *parts: object) -> "SplitMix64":
        return cls(derive_key(*parts))

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) via modulo rejection (unbiased)."""
        if n <= 0:
            raise ValueError("randrange() arg must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], both ends inclusive."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.randrange(hi - lo + 1)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def choice(self, seq):
        if not seq:
            raise ValueError("choice from empty sequence")
        return seq[self.randrange(len(seq))]

    def shuffle(self, xs: list) -> None:
        """Fisher-Yates, in place."""
        for i in range(len(xs) - 1, 0, -1):
            j = self.randrange(i + 1)
            xs[i], xs[j] = xs[j], xs[i]

    def sample(self, population, k: int) -> list:
        """k distinct elements, order randomized (partial Fisher-Yates)."""
        pool = list(population)
        if k > len(pool):
            raise ValueError("sample larger than population")
        for i in range(k):
            j = self.randint(i, len(pool) - 1)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]
