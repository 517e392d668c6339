"""
Oracle module for paging-lab.

Exact minimum-fault solvers for tiny traces and the exhaustive agreement
check against Belady.
"""

from .certification import CertificationReport, OracleComparison, certify_exhaustive, compare_oracles
from .paging_mdp import (
    BRUTE_FORCE_GUARD,
    DP_GUARD,
    DpStats,
    OracleGuard,
    PagingStateNode,
    brute_force_min_faults,
    dp_min_faults,
    optimal_first_action,
    solve_paging_dp,
)

__all__ = [
    'BRUTE_FORCE_GUARD',
    'DP_GUARD',
    'CertificationReport',
    'DpStats',
    'OracleComparison',
    'OracleGuard',
    'PagingStateNode',
    'brute_force_min_faults',
    'certify_exhaustive',
    'compare_oracles',
    'dp_min_faults',
    'optimal_first_action',
    'solve_paging_dp',
]
