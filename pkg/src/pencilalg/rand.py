"""Counter-based deterministic pseudo-randomness for seeded checks.

SplitMix64 keeps the stream identical across platforms and Python versions,
which the CLI relies on for byte-identical reports.
"""

from __future__ import annotations

from fractions import Fraction

_MASK = (1 << 64) - 1


class DetRNG:
    def __init__(self, seed):
        self.state = seed & _MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo, hi):
        """Uniform-ish integer in [lo, hi]; fine for test-instance generation."""
        return lo + self.next_u64() % (hi - lo + 1)

    def fraction(self, num_bound=9, den_bound=5):
        return Fraction(self.randint(-num_bound, num_bound), self.randint(1, den_bound))

    def nonzero_fraction(self, num_bound=9, den_bound=5):
        while True:
            q = self.fraction(num_bound, den_bound)
            if q != 0:
                return q

    def scalar(self, field, num_bound=9, den_bound=5):
        return field(self.fraction(num_bound, den_bound))

    def vector(self, field, n, num_bound=9, den_bound=5):
        return [self.scalar(field, num_bound, den_bound) for _ in range(n)]

    def matrix(self, field, rows, cols, num_bound=9, den_bound=5):
        return [self.vector(field, cols, num_bound, den_bound) for _ in range(rows)]
