"""Seeded, portable pseudo-random generator used by every seeded computation.

The generator is xoshiro256** (Blackman & Vigna), seeded through splitmix64
from a single unsigned 64-bit seed.  Both algorithms are published with
reference C implementations, so the exact stream can be reproduced in any
language; job determinism across runs and ports depends on it.

Derived values are pinned too:
  - `random()` is (next_u64() >> 11) * 2**-53, a double in [0, 1).
  - `randrange(n)` is next_u64() % n.  The modulo bias is far below any
    effect size at the range sizes used here (document and topic counts).
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


def splitmix64_stream(seed: int, count: int) -> list[int]:
    """First `count` outputs of splitmix64 starting from `seed`."""
    out = []
    state = seed & MASK64
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        out.append(z ^ (z >> 31))
    return out


class Xoshiro256:
    """xoshiro256** with splitmix64 seeding."""

    def __init__(self, seed: int):
        self._s = splitmix64_stream(seed, 4)

    def next_u64(self) -> int:
        s = self._s
        result = (_rotl((s[1] * 5) & MASK64, 7) * 9) & MASK64
        t = (s[1] << 17) & MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def random(self) -> float:
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange() bound must be positive")
        return self.next_u64() % n

    def choice_weighted(self, weights: list[float]) -> int:
        """Index drawn proportionally to non-negative weights."""
        total = 0.0
        for w in weights:
            total += w
        r = self.random() * total
        acc = 0.0
        for i, w in enumerate(weights):
            acc += w
            if r < acc:
                return i
        return len(weights) - 1
