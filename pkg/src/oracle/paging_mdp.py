"""
Exact minimum-fault oracles for tiny instances.

Both oracles use the paging model of the simulator: the cache starts empty,
a miss with free capacity always admits, and a miss on a full cache evicts
exactly one resident block. The fault count is the objective.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

from utils.error_handler import ConfigurationError, UsageError
from workload.trace_types import Trace

logger = logging.getLogger("paging_lab.oracle.paging_mdp")


@dataclass(frozen=True)
class OracleGuard:
    """Largest instance an oracle accepts (distinct blocks, length, capacity)."""
    max_blocks: int
    max_length: int
    max_k_b: int

    def check(self, trace: Trace, k_b: int, oracle: str) -> None:
        distinct = trace.distinct_blocks()
        if distinct > self.max_blocks or trace.length_t > self.max_length or k_b > self.max_k_b:
            raise UsageError(
                f"{oracle} limited to M <= {self.max_blocks} distinct blocks, "
                f"T <= {self.max_length}, k_b <= {self.max_k_b}; "
                f"got M={distinct}, T={trace.length_t}, k_b={k_b}"
            )


BRUTE_FORCE_GUARD = OracleGuard(max_blocks=6, max_length=14, max_k_b=3)
DP_GUARD = OracleGuard(max_blocks=8, max_length=24, max_k_b=4)


@dataclass(frozen=True)
class PagingStateNode:
    """Resident set (sorted) just before request ``step`` is served."""
    resident_set: Tuple[int, ...]
    step: int

    @classmethod
    def of(cls, blocks: Iterable[int], step: int) -> "PagingStateNode":
        return cls(tuple(sorted(blocks)), step)

    def successors(self, request: int, k_b: int) -> List[Tuple[Optional[int], "PagingStateNode", int]]:
        """
        Legal ``(evicted, next_state, fault)`` transitions on ``request``.

        Evicted blocks are listed in ascending order.
        """
        step = self.step + 1
        if request in self.resident_set:
            return [(None, PagingStateNode(self.resident_set, step), 0)]
        if len(self.resident_set) < k_b:
            return [(None, PagingStateNode.of(self.resident_set + (request,), step), 1)]
        moves = []
        for victim in self.resident_set:
            kept = tuple(b for b in self.resident_set if b != victim)
            moves.append((victim, PagingStateNode.of(kept + (request,), step), 1))
        return moves


def _check_capacity(k_b: int) -> None:
    if k_b < 1:
        raise ConfigurationError(f"k_b must be >= 1, got {k_b}")


def brute_force_min_faults(trace: Trace, k_b: int) -> int:
    """
    Minimum fault count by exhaustive search over every eviction choice.

    Branches whose fault count already reaches the best complete schedule are
    cut; no state is memoized.

    Raises:
        UsageError: If the instance exceeds the brute-force guard
    """
    _check_capacity(k_b)
    distinct = trace.distinct_blocks()
    if k_b >= distinct:
        return distinct
    BRUTE_FORCE_GUARD.check(trace, k_b, "brute force")

    requests = trace.requests
    best = trace.length_t

    def search(node: PagingStateNode, faults: int) -> None:
        nonlocal best
        if faults >= best:
            return
        if node.step == len(requests):
            best = faults
            return
        for _, child, fault in node.successors(requests[node.step], k_b):
            search(child, faults + fault)

    search(PagingStateNode((), 0), 0)
    return best


@dataclass(frozen=True)
class DpStats:
    """
    Outcome of backward induction.

    ``peak_layer_states`` is the largest number of states held in one layer;
    ``first_action`` is an optimal block to evict at the first full-cache miss
    (smallest id among ties), or None when no eviction is ever needed.
    """
    value: int
    layers: int
    peak_layer_states: int
    first_action: Optional[int]
    first_action_step: Optional[int]

    def state_bound(self, universe_m: int, k_b: int) -> int:
        """``C(M, k_b) * (k_b + 1)``."""
        return comb(universe_m, k_b) * (k_b + 1)


def _layer_states(seen: List[int], k_b: int, step: int) -> List[PagingStateNode]:
    size = min(k_b, len(seen))
    return [PagingStateNode(combo, step) for combo in combinations(sorted(seen), size)]


def _first_eviction(trace: Trace, k_b: int) -> Tuple[Optional[int], Optional[PagingStateNode]]:
    resident: List[int] = []
    for t, request in enumerate(trace.requests):
        if request in resident:
            continue
        if len(resident) < k_b:
            resident.append(request)
            continue
        return t, PagingStateNode.of(resident, t)
    return None, None


def solve_paging_dp(trace: Trace, k_b: int) -> DpStats:
    """
    Minimum fault count by layered backward induction.

    Before request ``t`` the cache holds ``min(k_b, d_t)`` of the ``d_t``
    distinct blocks seen so far, so layer ``t`` enumerates exactly those
    subsets. Only one layer of values is held at a time.

    Raises:
        UsageError: If the instance exceeds the DP guard
    """
    _check_capacity(k_b)
    distinct = trace.distinct_blocks()
    if k_b >= distinct:
        return DpStats(value=distinct, layers=trace.length_t, peak_layer_states=1,
                       first_action=None, first_action_step=None)
    DP_GUARD.check(trace, k_b, "dynamic programming")

    requests = trace.requests
    seen_before: List[List[int]] = []
    seen: List[int] = []
    for request in requests:
        seen_before.append(list(seen))
        if request not in seen:
            seen.append(request)

    first_step, first_state = _first_eviction(trace, k_b)
    first_action: Optional[int] = None

    values: Dict[PagingStateNode, int] = {
        state: 0 for state in _layer_states(seen, k_b, len(requests))
    }
    peak = len(values)

    for t in range(len(requests) - 1, -1, -1):
        layer: Dict[PagingStateNode, int] = {}
        for state in _layer_states(seen_before[t], k_b, t):
            best_value = None
            for victim, child, fault in state.successors(requests[t], k_b):
                candidate = fault + values[child]
                if best_value is None or candidate < best_value:
                    best_value = candidate
                    if t == first_step and state == first_state:
                        first_action = victim
            layer[state] = best_value
        values = layer
        peak = max(peak, len(values))

    root = PagingStateNode((), 0)
    stats = DpStats(
        value=values[root],
        layers=len(requests) + 1,
        peak_layer_states=peak,
        first_action=first_action,
        first_action_step=first_step,
    )
    logger.debug(f"DP solved T={trace.length_t} k_b={k_b}: value={stats.value} peak={peak}")
    return stats


def dp_min_faults(trace: Trace, k_b: int) -> int:
    """Minimum fault count by backward induction; equals ``brute_force_min_faults``."""
    return solve_paging_dp(trace, k_b).value


def optimal_first_action(trace: Trace, k_b: int) -> Optional[int]:
    """An optimal block to evict at the first full-cache miss, or None."""
    return solve_paging_dp(trace, k_b).first_action
