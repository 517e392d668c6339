"""
Bounds module for paging-lab.

Empirical checks of fault sensitivity, recall, the adversarial lower bound,
robustness and noisy Belady, plus sensitivity estimation.
"""

from .beta_estimation import BetaEstimate, estimate_beta, estimate_beta_detailed
from .checks import (
    LOWER_BOUND_FRACTION,
    beta_reference,
    check_fault_sensitivity,
    check_lower_bound,
    check_noisy_belady,
    check_recall_bound,
    check_robustness,
    check_robustness_measured_c,
    check_theorem4,
    corrected_sensitivity_bound,
)
from .reports import BoundName, BoundParams, BoundReport, CascadeReport, Direction

__all__ = [
    'LOWER_BOUND_FRACTION',
    'BetaEstimate',
    'BoundName',
    'BoundParams',
    'BoundReport',
    'CascadeReport',
    'Direction',
    'beta_reference',
    'check_fault_sensitivity',
    'check_lower_bound',
    'check_noisy_belady',
    'check_recall_bound',
    'check_robustness',
    'check_robustness_measured_c',
    'check_theorem4',
    'corrected_sensitivity_bound',
    'estimate_beta',
    'estimate_beta_detailed',
]
