"""
Drives an eviction policy over a trace and derives the basic fault metrics.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from cache.cache_state import CacheState
from cache.next_use import build_next_use_index
from cache.policies import PolicyAux, policy_step
from cache.policy_kind import PolicyKind
from utils.error_handler import ConfigurationError, UsageError
from utils.rng import POLICY_STREAM, SplitMix64, derive_seed
from workload.trace_types import Trace

logger = logging.getLogger("paging_lab.simulation.engine")


@dataclass(frozen=True, eq=False)
class SimResult:
    """Outcome of one (trace, policy, K_b, seed) run starting from an empty cache."""
    faults_total: int
    fault_indicator: np.ndarray
    eviction_log: Tuple[Tuple[int, int], ...]
    policy: PolicyKind
    k_b: int
    seed: int

    @property
    def length_t(self) -> int:
        return len(self.fault_indicator)

    def same_run(self, other: "SimResult") -> bool:
        """Whether two results are identical in every recorded field."""
        return (
            self.faults_total == other.faults_total
            and np.array_equal(self.fault_indicator, other.fault_indicator)
            and self.eviction_log == other.eviction_log
            and self.policy == other.policy
            and self.k_b == other.k_b
            and self.seed == other.seed
        )


def simulate(trace: Trace, kind: PolicyKind, k_b: int, seed: int = 0) -> SimResult:
    """
    Run ``kind`` with capacity ``k_b`` over ``trace``.

    Offline rules get a next-use index built from the whole trace; randomized
    rules draw from a stream derived from ``seed``. Cold misses count as
    faults.

    Args:
        trace: Request sequence
        kind: Eviction rule
        k_b: Cache capacity in blocks
        seed: 64-bit seed for randomized rules

    Raises:
        ConfigurationError: If ``k_b < 1``
    """
    if k_b < 1:
        raise ConfigurationError(f"k_b must be >= 1, got {k_b}")

    cache = CacheState.empty(k_b)
    aux = PolicyAux(
        next_use=build_next_use_index(trace) if kind.needs_next_use else None,
        rng=SplitMix64(derive_seed(seed, POLICY_STREAM)) if kind.needs_rng else None,
    )
    faults = np.zeros(trace.length_t, dtype=bool)
    evictions = []

    for t, request in enumerate(trace.requests):
        outcome = policy_step(kind, cache, request, t, aux)
        if outcome.fault:
            faults[t] = True
            if outcome.evicted is not None:
                evictions.append((t, outcome.evicted))

    result = SimResult(
        faults_total=int(np.count_nonzero(faults)),
        fault_indicator=faults,
        eviction_log=tuple(evictions),
        policy=kind,
        k_b=k_b,
        seed=seed,
    )
    logger.debug(
        f"simulate {kind.label} K_b={k_b} seed={seed}: "
        f"{result.faults_total}/{trace.length_t} faults"
    )
    return result


def fault_rate(result: SimResult, t: int) -> float:
    """
    Faults per request.

    Args:
        result: Simulation result
        t: Trace length the result was produced on

    Raises:
        UsageError: If ``t`` is zero or differs from the result's length
    """
    if t == 0:
        raise UsageError("fault rate of an empty trace is undefined")
    if t != result.length_t:
        raise UsageError(f"t={t} does not match the simulated length {result.length_t}")
    return result.faults_total / t


def competitive_ratio(f_alg: int, f_opt: int) -> float:
    """
    ``f_alg / f_opt``.

    Raises:
        UsageError: If ``f_opt`` is zero
    """
    if f_opt <= 0:
        raise UsageError(f"competitive ratio undefined for f_opt={f_opt}")
    return f_alg / f_opt
