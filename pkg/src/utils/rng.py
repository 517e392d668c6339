"""
SplitMix64 pseudo-random number generator.

Every stochastic choice in paging-lab draws from this generator so that a
(seed, inputs) pair reproduces the same trace or run bit for bit on any
platform. The mixing constants are those of the published SplitMix64
algorithm.
"""

from typing import List, MutableSequence, TypeVar

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

# Stream labels for derive_seed
PERTURB_STREAM = 1
POLICY_STREAM = 2
RECALL_STREAM = 3
COUPLING_POLICY_STREAM = 4

T = TypeVar("T")


class SplitMix64:
    """Stateful SplitMix64 generator over 64-bit unsigned integers."""

    def __init__(self, seed: int):
        """
        Initialize the generator.

        Args:
            seed: Any integer; reduced modulo 2**64
        """
        self._state = seed & MASK64

    def next_u64(self) -> int:
        """Return the next 64-bit unsigned integer."""
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Return a float uniformly distributed in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def next_below(self, bound: int) -> int:
        """
        Return an integer uniformly distributed in [0, bound).

        Uses rejection sampling so the result carries no modulo bias.

        Args:
            bound: Exclusive upper bound, at least 1
        """
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            value = self.next_u64()
            if value < limit:
                return value % bound

    def shuffle(self, items: MutableSequence[T]) -> None:
        """Shuffle ``items`` in place (Fisher-Yates, last index first)."""
        for i in range(len(items) - 1, 0, -1):
            j = self.next_below(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, n: int) -> List[int]:
        """Return a uniformly random permutation of ``range(n)``."""
        order = list(range(n))
        self.shuffle(order)
        return order

    def sample_indices(self, n: int, k: int) -> List[int]:
        """
        Choose ``k`` distinct indices from ``range(n)`` uniformly.

        Partial Fisher-Yates from the front; consumes exactly ``k`` draws.

        Returns:
            The chosen indices in selection order
        """
        if not 0 <= k <= n:
            raise ValueError(f"cannot sample {k} of {n}")
        pool = list(range(n))
        for i in range(k):
            j = i + self.next_below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


def derive_seed(seed: int, stream: int) -> int:
    """
    Derive an independent 64-bit seed for a named sub-stream.

    Args:
        seed: Experiment seed
        stream: One of the ``*_STREAM`` labels

    Returns:
        First output of SplitMix64 started at ``seed + stream * GOLDEN_GAMMA``
    """
    return SplitMix64((seed + stream * GOLDEN_GAMMA) & MASK64).next_u64()
