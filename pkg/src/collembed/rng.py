"""Deterministic 64-bit linear congruential generator.

The whole artifact draws randomness exclusively from this generator so
that embeddings, generated complexes, and certificates are reproducible
bit-for-bit from their seeds, independent of platform or interpreter.

    state <- (state * 6364136223846793005 + 1442695040888963407) mod 2^64

Each draw advances the state once and uses the top bits (state >> 33)
reduced modulo the range.  The tiny modulo bias is irrelevant here; what
matters is that any implementation of the recurrence reproduces the exact
same streams.
"""

from __future__ import annotations

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state * MULTIPLIER + INCREMENT) & _MASK
        return self.state

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n)."""
        if n <= 0:
            raise ValueError("range must be positive")
        return (self.next_u64() >> 33) % n
