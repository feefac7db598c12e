"""Portable seeded pseudo-random numbers (SplitMix64).

Scenario generation and Monte-Carlo runs must reproduce bit-identically
across platforms and Python/numpy versions, so they use a fixed published
recurrence instead of library default generators. SplitMix64 (Steele, Lea
& Flood, 2014) advances a 64-bit state by the golden-gamma constant and
mixes it:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z XOR (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z XOR (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output = z XOR (z >> 31)

Doubles are built from the top 53 bits, giving uniforms in [0, 1).
"""

_GOLDEN = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit generator; equal seeds give equal streams everywhere."""

    def __init__(self, seed: int):
        if not isinstance(seed, int):
            raise TypeError("seed must be an integer")
        self._state = seed & _MASK

    def next_uint64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return _mix(self._state)

    def random(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_uint64() >> 11) * 2.0**-53

    def uniform(self, low: float, high: float) -> float:
        """Uniform double in [low, high); returns low when low == high."""
        if high < low:
            raise ValueError(f"empty range [{low}, {high}]")
        return low + (high - low) * self.random()

    def randrange(self, n: int) -> int:
        """Unbiased integer in [0, n) via rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = _MASK + 1 - ((_MASK + 1) % n)
        while True:
            draw = self.next_uint64()
            if draw < limit:
                return draw % n


def derive_seed(base_seed: int, index: int) -> int:
    """Child seed for the index-th independent stream of a base seed.

    Equals the index-th output of a SplitMix64 stream seeded with
    ``base_seed``, so serial and parallel consumers agree on every child.
    """
    if index < 0:
        raise ValueError("index must be nonnegative")
    return _mix((base_seed + (index + 1) * _GOLDEN) & _MASK)
