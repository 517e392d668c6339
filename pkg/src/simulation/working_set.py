"""
Working-set series and the thrashing condition (capacity below the working set).
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable

import numpy as np

from utils.error_handler import ConfigurationError
from workload.trace_types import Trace


@dataclass(frozen=True, eq=False)
class WorkingSetReport:
    """``series[t]`` counts the distinct blocks among the last ``window`` requests."""
    series: np.ndarray
    window: int
    median_w: float
    thrashing: Dict[int, bool]

    def is_thrashing(self, k_b: int) -> bool:
        """True when the median working set exceeds ``k_b``."""
        return self.median_w > k_b


def working_set_series(
    trace: Trace,
    window: int,
    k_b_grid: Iterable[int] = (),
) -> WorkingSetReport:
    """
    Sliding-window distinct-block counts with thrashing flags.

    Args:
        trace: Request sequence
        window: Window length in requests
        k_b_grid: Capacities to flag

    Raises:
        ConfigurationError: If ``window < 1``
    """
    if window < 1:
        raise ConfigurationError(f"window must be >= 1, got {window}")

    counts: Counter = Counter()
    series = np.zeros(trace.length_t, dtype=np.int64)
    requests = trace.requests
    for t, block in enumerate(requests):
        counts[block] += 1
        if t >= window:
            leaving = requests[t - window]
            counts[leaving] -= 1
            if counts[leaving] == 0:
                del counts[leaving]
        series[t] = len(counts)

    median_w = float(np.median(series)) if trace.length_t else 0.0
    return WorkingSetReport(
        series=series,
        window=window,
        median_w=median_w,
        thrashing={k_b: median_w > k_b for k_b in k_b_grid},
    )
