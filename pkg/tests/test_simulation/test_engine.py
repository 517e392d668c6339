"""
Tests for the simulation engine, fault rates and competitive ratios.

Run with: PYTHONPATH=src pytest tests/test_simulation/test_engine.py -v
"""

import numpy as np
import pytest

from cache.policy_kind import BELADY, DEFAULT_POLICIES, LRU, RANDOM
from simulation.engine import SimResult, competitive_ratio, fault_rate, simulate
from utils.error_handler import ConfigurationError, UsageError
from workload.generators import gen_adversarial_trace, gen_zipf_trace
from workload.trace_types import Trace


@pytest.fixture(scope="module")
def zipf_trace(small_spec):
    return gen_zipf_trace(small_spec, 17)


def test_result_records_run():
    """The fault indicator, eviction log and counts agree."""
    trace = Trace.from_requests([1, 2, 3, 1, 2, 3])
    result = simulate(trace, LRU, 2)
    assert result.faults_total == 6
    assert result.fault_indicator.dtype == np.bool_
    assert int(result.fault_indicator.sum()) == 6
    assert len(result.eviction_log) == 4
    assert result.length_t == 6


def test_empty_trace_has_no_faults():
    result = simulate(Trace.from_requests([]), LRU, 2)
    assert result.faults_total == 0
    assert result.eviction_log == ()


def test_zero_capacity_rejected():
    with pytest.raises(ConfigurationError):
        simulate(Trace.from_requests([1]), LRU, 0)


def test_simulation_is_deterministic(zipf_trace):
    for kind in DEFAULT_POLICIES:
        assert simulate(zipf_trace, kind, 4, seed=3).same_run(simulate(zipf_trace, kind, 4, seed=3))


def test_belady_is_optimal_among_policies(zipf_trace):
    """No policy faults less than Belady."""
    f_opt = simulate(zipf_trace, BELADY, 4).faults_total
    for kind in DEFAULT_POLICIES:
        assert simulate(zipf_trace, kind, 4, seed=1).faults_total >= f_opt


def test_belady_faults_fall_as_capacity_grows(zipf_trace):
    faults = [simulate(zipf_trace, BELADY, k).faults_total for k in (1, 2, 4, 8, 16)]
    assert faults == sorted(faults, reverse=True)


def test_lru_faults_every_request_on_adversarial_cycle():
    trace = gen_adversarial_trace(8, 900)
    assert simulate(trace, LRU, 8).faults_total == 900


def test_belady_on_adversarial_cycle():
    """Belady faults about once per K_b requests on the K_b + 1 cycle."""
    trace = gen_adversarial_trace(8, 900)
    f_opt = simulate(trace, BELADY, 8).faults_total
    assert 900 / f_opt >= 0.8 * 8


def test_fault_rate():
    result = simulate(Trace.from_requests([1, 2, 1, 2]), LRU, 2)
    assert fault_rate(result, 4) == 0.5


def test_fault_rate_rejects_zero_and_mismatched_length():
    result = simulate(Trace.from_requests([1, 2]), LRU, 2)
    with pytest.raises(UsageError):
        fault_rate(result, 0)
    with pytest.raises(UsageError):
        fault_rate(result, 5)


def test_competitive_ratio():
    assert competitive_ratio(6, 4) == 1.5
    assert competitive_ratio(1130, 605) == pytest.approx(1.8677686)


def test_competitive_ratio_undefined_without_opt_faults():
    with pytest.raises(UsageError):
        competitive_ratio(3, 0)


def test_same_run_compares_every_field(zipf_trace):
    result = simulate(zipf_trace, RANDOM, 4, seed=1)
    relabeled = SimResult(
        faults_total=result.faults_total,
        fault_indicator=result.fault_indicator.copy(),
        eviction_log=result.eviction_log,
        policy=result.policy,
        k_b=result.k_b,
        seed=2,
    )
    assert not result.same_run(relabeled)
