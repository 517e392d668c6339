"""
Exhaustive agreement check between Belady and the exact oracles.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import List, Optional

from cache.policy_kind import BELADY
from simulation.engine import simulate
from workload.trace_types import Trace

from .paging_mdp import brute_force_min_faults, dp_min_faults

logger = logging.getLogger("paging_lab.oracle.certification")


@dataclass(frozen=True)
class OracleComparison:
    trace: Trace
    k_b: int
    belady: int
    dp: int
    brute_force: Optional[int]

    @property
    def agrees(self) -> bool:
        values = {self.belady, self.dp}
        if self.brute_force is not None:
            values.add(self.brute_force)
        return len(values) == 1


def compare_oracles(trace: Trace, k_b: int, with_brute_force: bool = True) -> OracleComparison:
    """Fault counts of Belady, the DP and (optionally) brute force on one trace."""
    return OracleComparison(
        trace=trace,
        k_b=k_b,
        belady=simulate(trace, BELADY, k_b).faults_total,
        dp=dp_min_faults(trace, k_b),
        brute_force=brute_force_min_faults(trace, k_b) if with_brute_force else None,
    )


@dataclass(frozen=True)
class CertificationReport:
    universe_m: int
    length_t: int
    k_b: int
    traces_checked: int
    mismatches: List[OracleComparison]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def certify_exhaustive(universe_m: int = 3, length_t: int = 8, k_b: int = 2) -> CertificationReport:
    """Compare all three on every trace of length ``length_t`` over ``universe_m`` blocks."""
    mismatches = []
    checked = 0
    for requests in product(range(universe_m), repeat=length_t):
        trace = Trace(requests=requests, universe_m=universe_m, length_t=length_t)
        comparison = compare_oracles(trace, k_b)
        checked += 1
        if not comparison.agrees:
            mismatches.append(comparison)
    logger.info(
        f"Certified {checked} traces (M={universe_m}, T={length_t}, k_b={k_b}): "
        f"{len(mismatches)} mismatches"
    )
    return CertificationReport(universe_m, length_t, k_b, checked, mismatches)
