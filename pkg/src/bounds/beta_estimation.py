"""
Estimating a workload's sensitivity to the serving policy.

Each policy serves its own coupled stream from the same seed; the estimate is
the largest pairwise Hamming distance between the streams divided by T,
averaged over seeds.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Tuple

import numpy as np

from cache.policy_kind import PolicyKind
from utils.error_handler import UsageError
from utils.parallel import run_tasks
from workload.generators import gen_coupled_trace, hamming_distance
from workload.trace_types import ZipfSpec


@dataclass(frozen=True)
class BetaEstimate:
    beta_true: float
    beta_hat: float
    per_seed: Tuple[float, ...]

    @property
    def seed_count(self) -> int:
        return len(self.per_seed)


def _seed_estimate(task) -> float:
    spec, beta_true, policy_set, k_b, seed = task
    if spec.length_t == 0:
        return 0.0
    traces = [gen_coupled_trace(spec, beta_true, policy, k_b, seed) for policy in policy_set]
    worst = max(hamming_distance(a, b) for a, b in combinations(traces, 2))
    return worst / spec.length_t


def estimate_beta_detailed(
    spec: ZipfSpec,
    beta_true: float,
    policy_set: Sequence[PolicyKind],
    k_b: int,
    seeds: Sequence[int],
    workers: Optional[int] = None,
) -> BetaEstimate:
    """
    Estimate the sensitivity and keep the per-seed values.

    Raises:
        UsageError: With fewer than two policies or no seeds
    """
    if len(policy_set) < 2:
        raise UsageError("estimating beta needs at least two policies")
    if not seeds:
        raise UsageError("estimating beta needs at least one seed")

    tasks = [(spec, beta_true, tuple(policy_set), k_b, seed) for seed in seeds]
    per_seed = run_tasks(_seed_estimate, tasks, workers)
    return BetaEstimate(
        beta_true=beta_true,
        beta_hat=float(np.mean(per_seed)),
        per_seed=tuple(per_seed),
    )


def estimate_beta(
    spec: ZipfSpec,
    beta_true: float,
    policy_set: Sequence[PolicyKind],
    k_b: int,
    seeds: Sequence[int],
    workers: Optional[int] = None,
) -> float:
    """Mean over seeds of the largest pairwise ``d_H / T`` between coupled streams."""
    return estimate_beta_detailed(spec, beta_true, policy_set, k_b, seeds, workers).beta_hat
