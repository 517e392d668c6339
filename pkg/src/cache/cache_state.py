"""
Cache state machine shared by every eviction policy.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Set

from utils.error_handler import ConfigurationError, UsageError


@dataclass(frozen=True)
class StepOutcome:
    """Result of serving one request."""
    fault: bool
    evicted: Optional[int] = None
    admitted: Optional[int] = None


@dataclass
class CacheState:
    """
    Resident blocks plus the per-block metadata the policies rank by.

    ``last_access``, ``access_count`` and ``insertion_order`` hold exactly the
    resident blocks. ``lifetime_count`` counts every request ever served for
    a block and is kept across evictions.
    """
    capacity_kb: int
    resident: Set[int] = field(default_factory=set)
    last_access: Dict[int, int] = field(default_factory=dict)
    access_count: Dict[int, int] = field(default_factory=dict)
    insertion_order: Dict[int, int] = field(default_factory=dict)
    lifetime_count: Dict[int, int] = field(default_factory=dict)
    _next_insertion: int = 0

    @classmethod
    def empty(cls, capacity_kb: int) -> "CacheState":
        """
        Create an empty cache.

        Raises:
            ConfigurationError: If ``capacity_kb`` is below 1
        """
        if capacity_kb < 1:
            raise ConfigurationError(f"cache capacity K_b must be >= 1, got {capacity_kb}")
        return cls(capacity_kb=capacity_kb)

    def __contains__(self, block: int) -> bool:
        return block in self.resident

    def __len__(self) -> int:
        return len(self.resident)

    def is_full(self) -> bool:
        return len(self.resident) >= self.capacity_kb

    def touch(self, block: int, t: int) -> None:
        """Record a hit on a resident block."""
        self.last_access[block] = t
        self.access_count[block] += 1
        self.lifetime_count[block] += 1

    def admit(self, block: int, t: int) -> None:
        """Bring a missing block in; the caller has made room."""
        if self.is_full():
            raise UsageError(f"cannot admit block {block}: cache is full")
        self.resident.add(block)
        self.last_access[block] = t
        self.access_count[block] = 1
        self.insertion_order[block] = self._next_insertion
        self._next_insertion += 1
        self.lifetime_count[block] = self.lifetime_count.get(block, 0) + 1

    def evict(self, block: int) -> None:
        """Drop a resident block and its per-residency metadata."""
        self.resident.remove(block)
        del self.last_access[block]
        del self.access_count[block]
        del self.insertion_order[block]

    def check_invariants(self) -> None:
        """
        Assert capacity and metadata consistency.

        Raises:
            UsageError: If the state is inconsistent
        """
        if len(self.resident) > self.capacity_kb:
            raise UsageError(
                f"{len(self.resident)} resident blocks exceed capacity {self.capacity_kb}"
            )
        for name in ("last_access", "access_count", "insertion_order"):
            if set(getattr(self, name)) != self.resident:
                raise UsageError(f"{name} does not match the resident set")
