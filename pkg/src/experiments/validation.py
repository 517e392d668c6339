"""
The bound-validation suite behind ``validate``.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

import numpy as np

from bounds.beta_estimation import BetaEstimate, estimate_beta_detailed
from bounds.checks import (
    check_fault_sensitivity,
    check_lower_bound,
    check_noisy_belady,
    check_recall_bound,
)
from bounds.reports import BoundReport
from cache.policy_kind import PolicyKind
from config.experiment_config import ExperimentConfig
from utils.parallel import run_tasks
from workload.generators import gen_zipf_trace

from .results_io import write_beta_estimates, write_bound_reports
from .sweep import robustness_reports

logger = logging.getLogger("paging_lab.experiments.validation")


@dataclass(frozen=True)
class ValidationOutcome:
    reports: List[BoundReport]
    estimates: List[BetaEstimate]
    bounds_csv: Path
    beta_csv: Path

    @property
    def hard_failures(self) -> List[BoundReport]:
        return [r for r in self.reports if r.failed_hard]

    @property
    def passed(self) -> bool:
        return not self.hard_failures


def _sensitivity_report(task) -> BoundReport:
    spec, kind, k_b, beta, seed = task
    report, _ = check_fault_sensitivity(kind, gen_zipf_trace(spec, seed), beta, k_b, seed)
    return report


def sensitivity_reports(config: ExperimentConfig, workers: Optional[int] = None) -> List[BoundReport]:
    """Per-seed fault-sensitivity reports for every deterministic policy."""
    kinds = sorted((k for k in config.policies if k.is_deterministic), key=PolicyKind.sort_key)
    tasks = [
        (config.zipf, kind, config.bounds.k_b, beta, seed)
        for kind in kinds
        for beta in config.beta_grid
        for seed in config.seeds
    ]
    return run_tasks(_sensitivity_report, tasks, workers)


def _check_estimates(estimates: List[BetaEstimate]) -> None:
    ordered = sorted(estimates, key=lambda e: e.beta_true)
    for estimate in ordered:
        if estimate.beta_true == 0 and estimate.beta_hat != 0:
            logger.warning(f"beta_hat = {estimate.beta_hat:.6f} at beta_true = 0")
    hats = np.array([e.beta_hat for e in ordered])
    if len(hats) > 1 and np.any(np.diff(hats) < 0):
        logger.warning("beta_hat is not monotone in beta_true")


def run_validation(config: ExperimentConfig, workers: Optional[int] = None) -> ValidationOutcome:
    """
    Run every bound check and write ``bounds.csv`` and ``beta_estimation.csv``.

    Recall and noisy-Belady checks use the first seed's trace as the base and
    every seed for their random choices.
    """
    bounds = config.bounds
    base = gen_zipf_trace(config.zipf, config.seeds[0])

    logger.info("Checking fault sensitivity")
    reports = sensitivity_reports(config, workers)

    logger.info("Checking recall")
    for rho in bounds.rho_grid:
        reports += check_recall_bound(base, rho, bounds.k_b, config.seeds, workers=workers)

    logger.info("Checking robustness")
    reports += robustness_reports(config, workers)

    logger.info("Checking noisy Belady")
    reports += check_noisy_belady(base, bounds.p_grid, bounds.k_b, seeds=config.seeds, workers=workers)

    logger.info("Checking the adversarial lower bound")
    for k_b in bounds.lower_bound_k_grid:
        reports += check_lower_bound(k_b, bounds.lower_bound_length)

    logger.info("Estimating beta")
    estimates = [
        estimate_beta_detailed(config.zipf, beta_true, bounds.estimation_policies, bounds.k_b, config.seeds, workers)
        for beta_true in bounds.beta_true_grid
    ]
    _check_estimates(estimates)

    out = config.output_dir
    outcome = ValidationOutcome(
        reports=reports,
        estimates=estimates,
        bounds_csv=write_bound_reports(reports, out / "bounds.csv"),
        beta_csv=write_beta_estimates(estimates, out / "beta_estimation.csv"),
    )

    for report in reports:
        if not report.satisfied and not report.hard:
            logger.warning(
                f"informational {report.bound_name.value} ({report.policy}) exceeded: "
                f"{report.empirical_value:.3f} vs {report.bound_value:.3f}"
            )
    for report in outcome.hard_failures:
        logger.error(
            f"{report.bound_name.value} ({report.policy}) violated: "
            f"{report.empirical_value:.3f} vs bound {report.bound_value:.3f}"
        )
    hard = sum(1 for r in reports if r.hard)
    logger.info(f"Validation: {hard - len(outcome.hard_failures)}/{hard} hard checks satisfied")
    return outcome
