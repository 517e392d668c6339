"""
CSV artifacts written by the experiment drivers.

Cells are formatted here (floats with six decimals, booleans as
``true``/``false``, missing values empty) so files are byte-identical
across runs; pandas only assembles and writes the table.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence

import pandas as pd

from bounds.beta_estimation import BetaEstimate
from bounds.reports import BoundReport
from utils.error_handler import ConfigurationError

logger = logging.getLogger("paging_lab.experiments.results_io")

RUN_COLUMNS = ["policy", "k_b", "beta", "seed", "faults", "fault_rate", "ratio_vs_belady"]
SUMMARY_COLUMNS = ["policy", "k_b", "beta", "metric", "mean", "sd", "seed_count"]
BOUND_COLUMNS = [
    "bound", "policy", "k_b", "beta", "rho", "p", "c", "d_f",
    "bound_value", "empirical", "satisfied", "slack", "seed_count",
]
WORKING_SET_COLUMNS = ["k_b", "seed", "window", "median_w", "thrashing"]
SENSITIVITY_COLUMNS = [
    "policy", "k_b", "beta", "seed", "fault_diff", "beta_t", "corrected_bound", "cascade_factor",
]
BETA_ESTIMATION_COLUMNS = ["beta_true", "beta_hat", "seed_count"]


def format_cell(value) -> str:
    """Render one CSV cell."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


@dataclass(frozen=True)
class RunRow:
    """One (policy, K_b, beta, seed) simulation."""
    policy: str
    policy_order: tuple
    k_b: int
    beta: float
    seed: int
    faults: int
    fault_rate: float
    ratio_vs_belady: Optional[float]

    def sort_key(self) -> tuple:
        return (self.policy_order, self.k_b, self.beta, self.seed)

    def cells(self) -> Dict[str, str]:
        return {
            "policy": self.policy,
            "k_b": format_cell(self.k_b),
            "beta": format_cell(float(self.beta)),
            "seed": format_cell(self.seed),
            "faults": format_cell(self.faults),
            "fault_rate": format_cell(float(self.fault_rate)),
            "ratio_vs_belady": format_cell(self.ratio_vs_belady),
        }


def write_table(rows: Iterable[Dict[str, str]], columns: Sequence[str], path: Path) -> Path:
    """
    Write pre-formatted rows with a header in ``columns`` order.

    Raises:
        ConfigurationError: If the file cannot be written
    """
    frame = pd.DataFrame(list(rows), columns=list(columns), dtype=str)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, lineterminator="\n")
    except OSError as e:
        raise ConfigurationError(f"cannot write {path}: {e}", key="output.dir") from e
    logger.info(f"Wrote {len(frame)} rows to {path}")
    return path


def render_table(rows: Iterable[Dict[str, str]], columns: Sequence[str]) -> str:
    """The CSV text ``write_table`` would produce."""
    frame = pd.DataFrame(list(rows), columns=list(columns), dtype=str)
    return frame.to_csv(index=False, lineterminator="\n")


def run_rows(rows: Iterable[RunRow]) -> List[Dict[str, str]]:
    """Sort by (policy, k_b, beta, seed) and format."""
    return [row.cells() for row in sorted(rows, key=RunRow.sort_key)]


def bound_cells(report: BoundReport) -> Dict[str, str]:
    params = report.params
    return {
        "bound": report.bound_name.value,
        "policy": format_cell(report.policy),
        "k_b": format_cell(params.k_b),
        "beta": format_cell(None if params.beta is None else float(params.beta)),
        "rho": format_cell(None if params.rho is None else float(params.rho)),
        "p": format_cell(None if params.p is None else float(params.p)),
        "c": format_cell(None if params.c is None else float(params.c)),
        "d_f": format_cell(None if params.d_f is None else float(params.d_f)),
        "bound_value": format_cell(float(report.bound_value)),
        "empirical": format_cell(float(report.empirical_value)),
        "satisfied": format_cell(report.satisfied),
        "slack": format_cell(float(report.slack)),
        "seed_count": format_cell(params.seed_count),
    }


def write_bound_reports(reports: Sequence[BoundReport], path: Path) -> Path:
    """Write reports in the order given; callers emit them deterministically."""
    return write_table((bound_cells(r) for r in reports), BOUND_COLUMNS, path)


def write_beta_estimates(estimates: Sequence[BetaEstimate], path: Path) -> Path:
    rows = (
        {
            "beta_true": format_cell(float(e.beta_true)),
            "beta_hat": format_cell(float(e.beta_hat)),
            "seed_count": format_cell(e.seed_count),
        }
        for e in sorted(estimates, key=lambda e: e.beta_true)
    )
    return write_table(rows, BETA_ESTIMATION_COLUMNS, path)
