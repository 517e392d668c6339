"""
Parameter sweeps behind the fault-rate, competitive-ratio, working-set and
sensitivity tables.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from bounds.checks import beta_reference, check_fault_sensitivity, check_robustness, check_robustness_measured_c
from bounds.reports import BoundReport
from cache.policy_kind import BELADY, FIFO, LRU, PolicyKind
from config.experiment_config import ExperimentConfig
from simulation.engine import competitive_ratio, fault_rate, simulate
from simulation.stats import summarize
from simulation.working_set import working_set_series
from utils.parallel import run_tasks
from utils.rng import PERTURB_STREAM, derive_seed
from workload.generators import gen_zipf_trace, perturb_trace
from workload.trace_types import ZipfSpec

from .results_io import (
    RUN_COLUMNS,
    SENSITIVITY_COLUMNS,
    SUMMARY_COLUMNS,
    WORKING_SET_COLUMNS,
    RunRow,
    format_cell,
    run_rows,
    write_bound_reports,
    write_table,
)

logger = logging.getLogger("paging_lab.experiments.sweep")

SUMMARY_METRICS = ("fault_rate", "ratio_vs_belady")

# result file names used by `sweep` and `reproduce fig3|fig4`
FAULT_RATES_CSV = "fig3a.csv"
RATIOS_CSV = "fig3b.csv"
SENSITIVITY_CSV = "fig4a.csv"
ROBUSTNESS_CSV = "fig4b.csv"
WORKING_SET_CSV = "working_set.csv"

# K_b-competitive on any fixed sequence
COMPETITIVE_POLICIES = (LRU, FIFO)


def _grid_point(task) -> List[RunRow]:
    spec, policies, k_b, beta, seed = task
    base = gen_zipf_trace(spec, seed)
    trace = base if beta == 0 else perturb_trace(base, beta, derive_seed(seed, PERTURB_STREAM)).trace

    f_opt = simulate(trace, BELADY, k_b, seed).faults_total
    rows = []
    for kind in policies:
        result = simulate(trace, kind, k_b, seed)
        rows.append(RunRow(
            policy=kind.label,
            policy_order=kind.sort_key(),
            k_b=k_b,
            beta=beta,
            seed=seed,
            faults=result.faults_total,
            fault_rate=fault_rate(result, trace.length_t),
            ratio_vs_belady=competitive_ratio(result.faults_total, f_opt) if f_opt > 0 else None,
        ))
    return rows


def run_grid(
    spec: ZipfSpec,
    policies: Sequence[PolicyKind],
    k_b_grid: Sequence[int],
    beta_grid: Sequence[float],
    seeds: Sequence[int],
    workers: Optional[int] = None,
) -> List[RunRow]:
    """
    Simulate every (policy, K_b, beta, seed) point.

    Each seed draws its own base trace; beta > 0 perturbs it with the
    seed's perturbation stream. Ratios are taken against Belady on the same
    trace.

    Returns:
        Rows sorted by (policy, k_b, beta, seed)
    """
    tasks = [
        (spec, tuple(policies), k_b, beta, seed)
        for k_b in k_b_grid
        for beta in beta_grid
        for seed in seeds
    ]
    logger.info(f"Sweeping {len(tasks)} grid points x {len(policies)} policies")
    rows = [row for chunk in run_tasks(_grid_point, tasks, workers) for row in chunk]
    return sorted(rows, key=RunRow.sort_key)


def summarize_rows(rows: Sequence[RunRow]) -> List[Dict[str, str]]:
    """Mean and sample sd over seeds for each (policy, K_b, beta) and metric."""
    groups: Dict[Tuple, List[RunRow]] = defaultdict(list)
    for row in rows:
        groups[(row.policy_order, row.policy, row.k_b, row.beta)].append(row)

    summary = []
    ordered = sorted(groups.items(), key=lambda item: (item[0][0], item[0][2], item[0][3]))
    for (_, policy, k_b, beta), members in ordered:
        for metric in SUMMARY_METRICS:
            values = [getattr(m, metric) for m in members]
            if any(v is None for v in values):
                continue
            stats = summarize(values)
            summary.append({
                "policy": policy,
                "k_b": format_cell(k_b),
                "beta": format_cell(float(beta)),
                "metric": metric,
                "mean": format_cell(stats.mean),
                "sd": format_cell(stats.sd),
                "seed_count": format_cell(stats.n_seeds),
            })
    return summary


def _working_set_task(task) -> Tuple[int, float, Dict[int, bool]]:
    spec, window, k_b_grid, seed = task
    report = working_set_series(gen_zipf_trace(spec, seed), window, k_b_grid)
    return seed, report.median_w, report.thrashing


def working_set_rows(config: ExperimentConfig, workers: Optional[int] = None) -> List[Dict[str, str]]:
    """Median working set per seed and the thrashing flag per capacity."""
    tasks = [(config.zipf, config.window, tuple(config.k_b_grid), seed) for seed in config.seeds]
    rows = []
    for seed, median_w, thrashing in run_tasks(_working_set_task, tasks, workers):
        for k_b in sorted(thrashing):
            rows.append({
                "k_b": format_cell(k_b),
                "seed": format_cell(seed),
                "window": format_cell(config.window),
                "median_w": format_cell(median_w),
                "thrashing": format_cell(thrashing[k_b]),
            })
    return sorted(rows, key=lambda r: (int(r["k_b"]), int(r["seed"])))


@dataclass(frozen=True)
class PolicySweepArtifacts:
    rows: List[RunRow]
    fault_rates: Path
    ratios: Path
    working_set: Path


def run_policy_sweep(config: ExperimentConfig, workers: Optional[int] = None) -> PolicySweepArtifacts:
    """Full sweep: per-run fault rates, seed summaries and the working-set report."""
    rows = run_grid(config.zipf, config.policies, config.k_b_grid, config.beta_grid, config.seeds, workers)
    out = config.output_dir
    return PolicySweepArtifacts(
        rows=rows,
        fault_rates=write_table(run_rows(rows), RUN_COLUMNS, out / FAULT_RATES_CSV),
        ratios=write_table(summarize_rows(rows), SUMMARY_COLUMNS, out / RATIOS_CSV),
        working_set=write_table(working_set_rows(config, workers), WORKING_SET_COLUMNS, out / WORKING_SET_CSV),
    )


def _sensitivity_task(task) -> Dict[str, str]:
    spec, kind, k_b, beta, seed = task
    base = gen_zipf_trace(spec, seed)
    report, cascade = check_fault_sensitivity(kind, base, beta, k_b, seed)
    return {
        "policy": kind.label,
        "k_b": format_cell(k_b),
        "beta": format_cell(float(beta)),
        "seed": format_cell(seed),
        "fault_diff": format_cell(int(report.empirical_value)),
        "beta_t": format_cell(beta_reference(beta, base.length_t)),
        "corrected_bound": format_cell(int(report.bound_value)),
        "cascade_factor": format_cell(cascade.cascade_factor if cascade else None),
    }


def sensitivity_rows(config: ExperimentConfig, workers: Optional[int] = None) -> List[Dict[str, str]]:
    """Fault difference under perturbation for every deterministic policy at ``bounds.k_b``."""
    kinds = sorted((k for k in config.policies if k.is_deterministic), key=PolicyKind.sort_key)
    k_b = config.bounds.k_b
    tasks = [
        (config.zipf, kind, k_b, beta, seed)
        for kind in kinds
        for beta in config.beta_grid
        for seed in config.seeds
    ]
    return run_tasks(_sensitivity_task, tasks, workers)


def robustness_reports(config: ExperimentConfig, workers: Optional[int] = None) -> List[BoundReport]:
    """Robustness bound for the online policies with the configured c, then with measured c."""
    online = [k for k in sorted(config.policies, key=PolicyKind.sort_key) if k in COMPETITIVE_POLICIES]
    bounds = config.bounds
    reports: List[BoundReport] = []
    for kind in online:
        reports += check_robustness(kind, config.zipf, config.beta_grid, bounds.c, bounds.k_b, config.seeds, workers)
    for kind in online:
        reports += check_robustness_measured_c(kind, config.zipf, config.beta_grid, bounds.k_b, config.seeds, workers)
    return reports


@dataclass(frozen=True)
class RobustnessArtifacts:
    sensitivity: Path
    robustness: Path
    reports: List[BoundReport]


def run_robustness_sweep(config: ExperimentConfig, workers: Optional[int] = None) -> RobustnessArtifacts:
    """Sensitivity series and robustness-bound reports."""
    out = config.output_dir
    sensitivity = write_table(sensitivity_rows(config, workers), SENSITIVITY_COLUMNS, out / SENSITIVITY_CSV)
    reports = robustness_reports(config, workers)
    return RobustnessArtifacts(
        sensitivity=sensitivity,
        robustness=write_bound_reports(reports, out / ROBUSTNESS_CSV),
        reports=reports,
    )
