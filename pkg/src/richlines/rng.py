"""Deterministic pseudo-random stream used by generators and searches.

SplitMix64 with the standard constants.  State advances by the golden-gamma
increment 0x9E3779B97F4A7B15; each output is the finalizer

    z = (state + 0x9E3779B97F4A7B15) mod 2^64
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2^64
    out = z ^ (z >> 31)

Only integer arithmetic is used, so every language reproduces the same
stream from the same 64-bit seed.  Streams are split by hashing a label
into a child seed, which keeps independently generated instances stable
under unrelated code changes.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7B15


def _mix(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix:
    """A splittable 64-bit generator with a tiny integer-only API."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix(self._state)

    def next_below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection (n must be positive)."""
        if n <= 0:
            raise ValueError("next_below needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def next_range(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        return lo + self.next_below(hi - lo + 1)

    def split(self, label: int) -> "SplitMix":
        """Child stream derived from this seed and an integer label."""
        return SplitMix(_mix(self._state ^ _mix(label & _MASK)))


def stream(seed: int, *labels: int) -> SplitMix:
    """Convenience: seed a stream and split it through a label path."""
    g = SplitMix(seed)
    for label in labels:
        g = g.split(label)
    return g
