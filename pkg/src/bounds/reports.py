"""
Result records of the bound checks.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from utils.error_handler import UsageError

NUMERIC_EPSILON = 1e-9


class BoundName(Enum):
    """Bounds the validation suite checks."""
    FAULT_SENSITIVITY = "fault_sensitivity"  # |F(r^beta) - F(r)| <= (K_b+1) floor(beta T)
    RECALL = "recall"                        # approximate retrieval with recall rho
    LOWER_BOUND = "lower_bound"              # deterministic online ratio on the cyclic trace
    ROBUSTNESS = "robustness"                # F_A <= c F_opt + (c+1)(K_b+1) beta T
    NOISY_BELADY = "noisy_belady"            # F_noisy <= F_opt + (1-p) D_f T

    # aliases under the interface names
    LEMMA_1A = "fault_sensitivity"
    LEMMA_1B = "recall"
    THM_3 = "lower_bound"
    THM_4 = "robustness"
    PROP_6 = "noisy_belady"


class Direction(Enum):
    """Whether the empirical value must stay below or above the bound."""
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class BoundParams:
    """Parameters a report was produced under; unused ones stay None."""
    k_b: Optional[int] = None
    beta: Optional[float] = None
    rho: Optional[float] = None
    p: Optional[float] = None
    c: Optional[float] = None
    d_f: Optional[float] = None
    t: Optional[int] = None
    seed_count: int = 1


@dataclass(frozen=True)
class BoundReport:
    """
    One bound check.

    ``hard`` reports decide the exit status of ``validate``; the others are
    informational. ``slack`` is positive exactly when the report is satisfied
    by more than the numeric epsilon, whichever the direction.
    """
    bound_name: BoundName
    bound_value: float
    empirical_value: float
    params: BoundParams = field(default_factory=BoundParams)
    policy: Optional[str] = None
    direction: Direction = Direction.UPPER
    hard: bool = True
    note: str = ""

    @property
    def satisfied(self) -> bool:
        if self.direction is Direction.UPPER:
            return self.empirical_value <= self.bound_value + NUMERIC_EPSILON
        return self.empirical_value >= self.bound_value - NUMERIC_EPSILON

    @property
    def slack(self) -> float:
        if self.direction is Direction.UPPER:
            return self.bound_value - self.empirical_value
        return self.empirical_value - self.bound_value

    @property
    def failed_hard(self) -> bool:
        """True when a hard-asserted report is violated."""
        return self.hard and not self.satisfied


@dataclass(frozen=True)
class CascadeReport:
    """How many extra faults each flipped request caused on average."""
    beta: float
    empirical_diff: int
    flips_d: int

    def __post_init__(self):
        if self.flips_d < 1:
            raise UsageError("a cascade needs at least one flipped request")

    @property
    def cascade_factor(self) -> float:
        return self.empirical_diff / self.flips_d
