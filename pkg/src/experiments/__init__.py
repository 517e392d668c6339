"""
Experiment drivers for paging-lab.

Sweeps, the validation suite, CSV output and subcommand dispatch.
"""

from .runner import Command, CommandOptions, run_experiment
from .sweep import run_policy_sweep, run_robustness_sweep, run_grid, summarize_rows
from .validation import ValidationOutcome, run_validation

__all__ = [
    'Command',
    'CommandOptions',
    'ValidationOutcome',
    'run_experiment',
    'run_policy_sweep',
    'run_robustness_sweep',
    'run_grid',
    'run_validation',
    'summarize_rows',
]
