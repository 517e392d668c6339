"""
Simulation module for paging-lab.

Runs policies over traces and computes fault metrics, working sets, the
paging cost model and multi-seed summaries.
"""

from .cost_model import CostBreakdown, CostModelParams, cost_model
from .engine import SimResult, competitive_ratio, fault_rate, simulate
from .stats import SummaryStats, aggregate_seeds, summarize
from .working_set import WorkingSetReport, working_set_series

__all__ = [
    'CostBreakdown',
    'CostModelParams',
    'SimResult',
    'SummaryStats',
    'WorkingSetReport',
    'aggregate_seeds',
    'competitive_ratio',
    'cost_model',
    'fault_rate',
    'simulate',
    'summarize',
    'working_set_series',
]
