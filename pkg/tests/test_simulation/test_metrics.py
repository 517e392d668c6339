"""
Tests for working sets, the cost model and multi-seed aggregation.

Run with: PYTHONPATH=src pytest tests/test_simulation/test_metrics.py -v
"""

import math

import pytest

from cache.policy_kind import FIFO, LRU
from simulation.cost_model import CostModelParams, cost_model
from simulation.engine import simulate
from simulation.stats import aggregate_seeds, summarize
from simulation.working_set import working_set_series
from utils.error_handler import ConfigurationError, UsageError
from workload.generators import gen_adversarial_trace, gen_zipf_trace
from workload.trace_types import Trace


def test_working_set_small_example():
    report = working_set_series(Trace.from_requests([1, 1, 1, 2]), 2)
    assert report.series.tolist() == [1, 1, 1, 2]
    assert report.median_w == 1.0


def test_working_set_window_one_is_always_one():
    report = working_set_series(Trace.from_requests([3, 1, 4, 1, 5]), 1)
    assert report.series.tolist() == [1, 1, 1, 1, 1]


def test_working_set_flags_thrashing():
    """A K_b + 1 cycle has a working set just above K_b."""
    report = working_set_series(gen_adversarial_trace(8, 100), 9, k_b_grid=(8, 9))
    assert report.median_w == 9.0
    assert report.thrashing == {8: True, 9: False}
    assert report.is_thrashing(8)


def test_working_set_rejects_zero_window():
    with pytest.raises(ConfigurationError):
        working_set_series(Trace.from_requests([1]), 0)


def test_working_set_bounded_by_hot_set(small_spec):
    trace = gen_zipf_trace(small_spec, 2)
    report = working_set_series(trace, 100)
    assert report.series.max() <= 2 * small_spec.hot_set_size


def test_cost_model_terms():
    """N K^2 attention, (N/B) K_b log2 M retrieval, (N/B) K_b^2 policy."""
    params = CostModelParams(n_tokens=1000, context_k=100, block_b=10, memory_m=1024)
    cost = cost_model(params)
    assert params.k_b == 10
    assert cost.attention_ops == 1e7
    assert cost.retrieval_ops == pytest.approx(1e4)
    assert cost.policy_ops == pytest.approx(1e4)
    assert cost.total == pytest.approx(1e7 + 2e4)


def test_cost_model_retrieval_uses_log2():
    cost = cost_model(CostModelParams(n_tokens=8, context_k=8, block_b=8, memory_m=2))
    assert cost.retrieval_ops == pytest.approx(math.log2(2))


def test_cost_model_rejects_non_dividing_block():
    with pytest.raises(ConfigurationError):
        CostModelParams(n_tokens=100, context_k=100, block_b=7, memory_m=16)


def test_cost_model_rejects_zero_parameter():
    with pytest.raises(ConfigurationError):
        CostModelParams(n_tokens=0, context_k=100, block_b=10, memory_m=16)


def test_summarize_uses_sample_standard_deviation():
    stats = summarize([1.0, 3.0])
    assert stats.mean == 2.0
    assert stats.sd == pytest.approx(math.sqrt(2.0))
    assert stats.n_seeds == 2


def test_summarize_single_value_has_zero_sd():
    assert summarize([5.0]).sd == 0.0


def test_summarize_constant_values():
    assert summarize([3.0, 3.0, 3.0]).sd == 0.0


def test_summarize_empty_raises():
    with pytest.raises(UsageError):
        summarize([])


def test_aggregate_seeds(small_spec):
    results = [simulate(gen_zipf_trace(small_spec, s), LRU, 4, seed=s) for s in (1, 2, 3)]
    stats = aggregate_seeds(results, "faults")
    assert stats.per_seed == tuple(float(r.faults_total) for r in results)
    rates = aggregate_seeds(results, "fault_rate")
    assert rates.mean == pytest.approx(stats.mean / small_spec.length_t)
    assert aggregate_seeds(results, lambda r: 1.0).mean == 1.0


def test_aggregate_seeds_rejects_mixed_runs():
    trace = Trace.from_requests([1, 2, 3])
    with pytest.raises(UsageError):
        aggregate_seeds([simulate(trace, LRU, 2), simulate(trace, FIFO, 2)], "faults")


def test_aggregate_seeds_rejects_empty_and_unknown_metric():
    with pytest.raises(UsageError):
        aggregate_seeds([], "faults")
    with pytest.raises(UsageError):
        aggregate_seeds([simulate(Trace.from_requests([1]), LRU, 1)], "latency")
