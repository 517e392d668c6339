"""
Identifiers for the eviction policies the simulator knows.
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from utils.error_handler import ConfigurationError


class PolicyName(Enum):
    """Eviction rules."""
    BELADY = "belady"                  # Evict the block used farthest in the future
    LRU = "lru"                        # Least recently used
    LFU = "lfu"                        # Least frequently used, counters reset on eviction
    FIFO = "fifo"                      # Oldest admission
    RANDOM = "random"                  # Uniform over resident blocks
    NOISY_BELADY = "noisy_belady"      # Belady with probability p, else a wrong block
    LFU_PERSISTENT = "lfu_persistent"  # LFU whose counters survive eviction


_ORDER = {name: index for index, name in enumerate(PolicyName)}
_NOISY_PATTERN = re.compile(r"^noisy_belady\(\s*([0-9.eE+-]+)\s*\)$")


@dataclass(frozen=True)
class PolicyKind:
    """A policy name plus the accuracy parameter of NOISY_BELADY."""
    name: PolicyName
    p: Optional[float] = None

    def __post_init__(self):
        if self.name is PolicyName.NOISY_BELADY:
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise ConfigurationError(
                    f"noisy_belady needs an accuracy p in [0, 1], got {self.p}"
                )
        elif self.p is not None:
            raise ConfigurationError(f"{self.name.value} takes no accuracy parameter")

    @property
    def needs_next_use(self) -> bool:
        """Whether the rule consults future requests."""
        return self.name in (PolicyName.BELADY, PolicyName.NOISY_BELADY)

    @property
    def needs_rng(self) -> bool:
        """Whether the rule makes random choices."""
        return self.name in (PolicyName.RANDOM, PolicyName.NOISY_BELADY)

    @property
    def is_offline(self) -> bool:
        return self.needs_next_use

    @property
    def is_deterministic(self) -> bool:
        return not self.needs_rng

    @property
    def label(self) -> str:
        """Name used in CSV files and on the command line."""
        if self.name is PolicyName.NOISY_BELADY:
            return f"noisy_belady({self.p:g})"
        return self.name.value

    def sort_key(self) -> Tuple[int, float]:
        """Deterministic ordering for result rows."""
        return _ORDER[self.name], self.p if self.p is not None else 0.0

    @classmethod
    def parse(cls, text: str) -> "PolicyKind":
        """
        Parse a policy label such as ``lru`` or ``noisy_belady(0.75)``.

        Raises:
            ConfigurationError: If the label is not recognized
        """
        value = text.strip().lower()
        match = _NOISY_PATTERN.match(value)
        if match:
            try:
                return cls(PolicyName.NOISY_BELADY, float(match.group(1)))
            except ValueError:
                raise ConfigurationError(f"bad accuracy in policy '{text}'") from None
        for name in PolicyName:
            if name.value == value and name is not PolicyName.NOISY_BELADY:
                return cls(name)
        raise ConfigurationError(f"unknown policy '{text}'")

    def __str__(self) -> str:
        return self.label


BELADY = PolicyKind(PolicyName.BELADY)
LRU = PolicyKind(PolicyName.LRU)
LFU = PolicyKind(PolicyName.LFU)
FIFO = PolicyKind(PolicyName.FIFO)
RANDOM = PolicyKind(PolicyName.RANDOM)
LFU_PERSISTENT = PolicyKind(PolicyName.LFU_PERSISTENT)

DEFAULT_POLICIES: Tuple[PolicyKind, ...] = (BELADY, LRU, LFU, FIFO, RANDOM)


def noisy_belady(p: float) -> PolicyKind:
    """NOISY_BELADY with accuracy ``p``."""
    return PolicyKind(PolicyName.NOISY_BELADY, p)
