"""
Multi-seed aggregation.
"""

from dataclasses import dataclass
from typing import Callable, Sequence, Tuple, Union

import numpy as np

from utils.error_handler import UsageError

from .engine import SimResult

MetricSelector = Union[str, Callable[[SimResult], float]]

_NAMED_METRICS = {
    "faults": lambda r: float(r.faults_total),
    "fault_rate": lambda r: r.faults_total / r.length_t,
    "evictions": lambda r: float(len(r.eviction_log)),
}


@dataclass(frozen=True)
class SummaryStats:
    """Sample mean and sample standard deviation (n - 1 denominator)."""
    mean: float
    sd: float
    n_seeds: int
    per_seed: Tuple[float, ...]


def summarize(values: Sequence[float]) -> SummaryStats:
    """
    Summarize per-seed values; a single value has sd 0.

    Raises:
        UsageError: If ``values`` is empty
    """
    if len(values) == 0:
        raise UsageError("cannot summarize an empty list")
    data = np.asarray(values, dtype=np.float64)
    sd = float(np.std(data, ddof=1)) if len(data) > 1 else 0.0
    return SummaryStats(
        mean=float(np.mean(data)),
        sd=sd,
        n_seeds=len(data),
        per_seed=tuple(float(v) for v in data),
    )


def aggregate_seeds(results: Sequence[SimResult], metric: MetricSelector) -> SummaryStats:
    """
    Aggregate a metric over runs that differ only by seed.

    Args:
        results: Runs sharing policy and K_b
        metric: ``"faults"``, ``"fault_rate"``, ``"evictions"`` or a callable

    Raises:
        UsageError: On an empty list, mixed configurations or an unknown metric name
    """
    if not results:
        raise UsageError("cannot aggregate an empty list of results")
    first = results[0]
    for result in results[1:]:
        if result.policy != first.policy or result.k_b != first.k_b:
            raise UsageError("results mix policies or capacities")

    if isinstance(metric, str):
        if metric not in _NAMED_METRICS:
            raise UsageError(f"unknown metric '{metric}'")
        metric = _NAMED_METRICS[metric]
    return summarize([metric(result) for result in results])
