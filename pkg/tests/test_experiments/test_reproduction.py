"""
Slow checks of the default workload against its expected result bands.

Run with: PYTHONPATH=src pytest tests/test_experiments/test_reproduction.py -m reproduction -v
"""

import numpy as np
import pytest

from bounds.beta_estimation import estimate_beta
from bounds.checks import check_fault_sensitivity, check_lower_bound, check_noisy_belady, check_recall_bound
from cache.policy_kind import BELADY, FIFO, LFU, LRU
from config.experiment_config import ExperimentConfig
from experiments.sweep import robustness_reports, run_grid
from workload.generators import gen_zipf_trace

pytestmark = pytest.mark.reproduction

SEEDS = tuple(range(42, 52))
K_B = 8


@pytest.fixture(scope="module")
def baseline_rows():
    """All default policies at K_b in {4, 8, 16}, beta = 0, ten seeds."""
    config = ExperimentConfig()
    return run_grid(config.zipf, config.policies, (4, 8, 16), (0.0,), SEEDS, workers=0)


def mean_of(rows, policy, k_b, field):
    return float(np.mean([getattr(r, field) for r in rows if r.policy == policy and r.k_b == k_b]))


@pytest.mark.parametrize("policy,low,high", [
    ("belady", 0.10, 0.14),
    ("lru", 0.18, 0.28),
    ("fifo", 0.22, 0.33),
    ("random", 0.22, 0.34),
    ("lfu", 0.45, 0.70),
])
def test_fault_rate_bands(baseline_rows, policy, low, high):
    assert low <= mean_of(baseline_rows, policy, K_B, "fault_rate") <= high


def test_competitive_ratio_bands(baseline_rows):
    assert 1.6 <= mean_of(baseline_rows, "lru", K_B, "ratio_vs_belady") <= 2.2
    assert 3.5 <= mean_of(baseline_rows, "lfu", K_B, "ratio_vs_belady") <= 6.5
    for row in baseline_rows:
        if row.k_b == K_B:
            assert row.ratio_vs_belady < K_B


def test_gap_narrows_with_capacity(baseline_rows):
    """LRU's competitive-ratio excess over Belady shrinks as the cache grows."""
    def gap(k_b):
        return mean_of(baseline_rows, "lru", k_b, "ratio_vs_belady") - mean_of(baseline_rows, "belady", k_b, "ratio_vs_belady")

    gap_small, gap_large = gap(4), gap(16)
    assert gap_large < gap_small


def test_fault_sensitivity_never_violated_and_cascade_near_one():
    config = ExperimentConfig()
    lru_factors = []
    for seed in SEEDS:
        base = gen_zipf_trace(config.zipf, seed)
        for kind in (BELADY, LRU, LFU, FIFO):
            for beta in config.beta_grid:
                report, cascade = check_fault_sensitivity(kind, base, beta, K_B, seed)
                assert report.satisfied
                if kind == LRU and 0 < beta <= 0.15 and cascade is not None:
                    lru_factors.append(cascade.cascade_factor)
    assert 1.0 <= float(np.mean(lru_factors)) <= 1.5


def test_robustness_holds_with_positive_slack():
    reports = robustness_reports(ExperimentConfig(), workers=0)
    hard = [r for r in reports if r.hard]
    assert hard
    assert all(r.satisfied and r.slack > 0 for r in hard)


def test_adversarial_lower_bound():
    for k_b in (2, 4, 8):
        assert all(r.satisfied for r in check_lower_bound(k_b, 5000))


def test_noisy_belady_faults_fall_with_accuracy():
    base = gen_zipf_trace(ExperimentConfig().zipf, SEEDS[0])
    reports = check_noisy_belady(base, [0.0, 0.25, 0.5, 0.75, 1.0], K_B, seeds=SEEDS, workers=0)
    assert all(r.satisfied for r in reports)
    values = [r.empirical_value for r in reports]
    assert values == sorted(values, reverse=True)


def test_recall_corrected_bound():
    base = gen_zipf_trace(ExperimentConfig().zipf, SEEDS[0])
    for rho in (0.8, 0.9, 0.95, 1.0):
        uncorrected, corrected = check_recall_bound(base, rho, K_B, SEEDS, workers=0)
        assert corrected.satisfied
        if rho == 1.0:
            assert corrected.empirical_value == 0.0


def test_beta_estimate_tracks_coupling():
    spec = ExperimentConfig().zipf
    estimates = [estimate_beta(spec, beta, [LRU, FIFO], K_B, SEEDS, workers=0) for beta in (0.0, 0.1, 0.2, 0.4)]
    assert estimates[0] == 0.0
    assert estimates == sorted(estimates)

