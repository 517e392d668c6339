"""
Next-use preprocessing for offline eviction.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence, Union

import numpy as np

if TYPE_CHECKING:
    from workload.trace_types import Trace

NEVER = int(np.iinfo(np.int64).max)


@dataclass(frozen=True, eq=False)
class NextUseIndex:
    """``next_use[t]`` is the next step after ``t`` requesting the same block, or NEVER."""
    next_use: np.ndarray

    def after(self, t: int) -> int:
        return int(self.next_use[t])

    def __len__(self) -> int:
        return len(self.next_use)


def build_next_use_index(trace: Union["Trace", Sequence[int]]) -> NextUseIndex:
    """
    Build the next-use index with one backward scan.

    Args:
        trace: A Trace or a plain sequence of block ids

    Returns:
        Index over 0-based step numbers
    """
    requests = trace.requests if hasattr(trace, "requests") else trace
    next_use = np.full(len(requests), NEVER, dtype=np.int64)
    last_seen: dict = {}
    for t in range(len(requests) - 1, -1, -1):
        block = requests[t]
        seen = last_seen.get(block)
        if seen is not None:
            next_use[t] = seen
        last_seen[block] = t
    return NextUseIndex(next_use=next_use)
