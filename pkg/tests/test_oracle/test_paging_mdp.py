"""
Tests for the exact minimum-fault oracles and the Belady certification.

Run with: PYTHONPATH=src pytest tests/test_oracle/test_paging_mdp.py -v
"""

from itertools import product

import pytest

from cache.policy_kind import BELADY
from oracle.certification import certify_exhaustive, compare_oracles
from oracle.paging_mdp import (
    PagingStateNode,
    brute_force_min_faults,
    dp_min_faults,
    optimal_first_action,
    solve_paging_dp,
)
from simulation.engine import simulate
from utils.error_handler import ConfigurationError, UsageError
from workload.trace_types import Trace


def test_small_examples():
    trace = Trace.from_requests([1, 2, 1, 3, 2])
    assert brute_force_min_faults(trace, 2) == 3
    assert dp_min_faults(trace, 2) == 3

    cycle = Trace.from_requests([1, 2, 3, 1, 2, 3])
    assert brute_force_min_faults(cycle, 2) == 4
    assert dp_min_faults(cycle, 2) == 4


def test_empty_trace_has_no_faults():
    empty = Trace.from_requests([])
    assert brute_force_min_faults(empty, 2) == 0
    assert dp_min_faults(empty, 2) == 0


def test_capacity_covering_all_blocks_counts_cold_misses():
    """With room for every block only the first touches fault."""
    trace = Trace.from_requests([4, 0, 4, 9, 0, 9])
    assert brute_force_min_faults(trace, 3) == 3
    assert dp_min_faults(trace, 5) == 3


def test_zero_capacity_rejected():
    with pytest.raises(ConfigurationError):
        dp_min_faults(Trace.from_requests([1, 2]), 0)


def test_brute_force_guard():
    trace = Trace.from_requests([0, 1, 2, 3, 4, 5, 6, 0, 1, 2])
    with pytest.raises(UsageError):
        brute_force_min_faults(trace, 2)


def test_dp_guard():
    trace = Trace.from_requests(list(range(9)) + [0, 1])
    with pytest.raises(UsageError):
        dp_min_faults(trace, 2)
    with pytest.raises(UsageError):
        dp_min_faults(Trace.from_requests([0, 1] * 13), 1)


def test_dp_accepts_larger_instances_than_brute_force():
    trace = Trace.from_requests([0, 1, 2, 3, 4, 5, 6, 0, 1, 2, 3, 4, 5, 6, 0, 1, 2, 3])
    assert dp_min_faults(trace, 3) == simulate(trace, BELADY, 3).faults_total


def test_dp_layer_size_respects_state_bound():
    """No layer holds more than C(M, k) * (k + 1) states."""
    trace = Trace.from_requests([0, 1, 2, 3, 4, 5, 0, 2, 4, 1, 3, 5, 5, 4, 3, 2])
    stats = solve_paging_dp(trace, 3)
    assert stats.peak_layer_states <= stats.state_bound(6, 3)
    assert stats.layers == trace.length_t + 1


def test_optimal_first_action_evicts_block_not_needed_soon():
    trace = Trace.from_requests([1, 2, 3, 1])
    assert optimal_first_action(trace, 2) == 2
    assert solve_paging_dp(trace, 2).first_action_step == 2


def test_first_action_absent_without_eviction():
    assert optimal_first_action(Trace.from_requests([1, 2, 1]), 2) is None


def test_state_node_successors():
    node = PagingStateNode.of([3, 1], 0)
    assert node.resident_set == (1, 3)
    assert node.successors(1, 2) == [(None, PagingStateNode((1, 3), 1), 0)]
    evictions = node.successors(2, 2)
    assert [victim for victim, _, _ in evictions] == [1, 3]
    assert all(fault == 1 for _, _, fault in evictions)


@pytest.mark.parametrize("k_b", [1, 2, 3])
def test_oracles_agree_with_belady_on_four_block_traces(k_b):
    for requests in product(range(4), repeat=6):
        if requests[0] != 0:
            continue
        comparison = compare_oracles(Trace.from_requests(requests, universe_m=4), k_b)
        assert comparison.agrees, requests


def test_exhaustive_certification():
    """Belady, DP and brute force agree on all 3^8 traces at k_b = 2."""
    report = certify_exhaustive(3, 8, 2)
    assert report.traces_checked == 3 ** 8
    assert report.passed
