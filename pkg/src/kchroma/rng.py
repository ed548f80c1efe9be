"""Seedable counter-based 64-bit mixing generator.

The same draw sequence is produced by every backend and platform. Draw t
(1-based) for seed s is computed over 64-bit unsigned arithmetic as:

    x  = s + t * 0x9E3779B97F4A7C15
    x ^= x >> 30;  x *= 0xBF58476D1CE4E5B9
    x ^= x >> 27;  x *= 0x94D049BB133111EB
    x ^= x >> 31

and a uniform in [0, 1) is (x >> 11) / 2**53. Counter-based form means
draw t is a pure function of (seed, t), so vectorized and loop
implementations agree bit for bit.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def mix64(x: int) -> int:
    """Finalizing mix of a 64-bit value (Python int, already masked)."""
    x &= MASK64
    x ^= x >> 30
    x = (x * MIX1) & MASK64
    x ^= x >> 27
    x = (x * MIX2) & MASK64
    x ^= x >> 31
    return x


def draw_u64(seed: int, t: int) -> int:
    """The t-th (1-based) 64-bit draw of the stream seeded with `seed`."""
    return mix64((seed + t * GOLDEN) & MASK64)


class MixStream:
    """Stateful wrapper over the counter-based draws."""

    def __init__(self, seed: int):
        self._seed = seed & MASK64
        self._t = 0

    def next_u64(self) -> int:
        self._t += 1
        return draw_u64(self._seed, self._t)

    def uniform(self) -> float:
        """Uniform float in [0, 1)."""
        return (self.next_u64() >> 11) * 2.0**-53

    def choice(self, n: int) -> int:
        """Index in [0, n). Modulo bias is irrelevant at the scales used here."""
        if n <= 0:
            raise ValueError("choice from empty range")
        return self.next_u64() % n
