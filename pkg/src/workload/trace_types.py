"""
Domain types for block-request traces.

A trace is the exogenous request stream a paging policy is driven by. Blocks
are opaque integer identifiers in ``[0, universe_m)``.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Tuple

from utils.error_handler import ConfigurationError

BlockId = int


class TraceKind(Enum):
    """How a trace was produced; recorded in trace file headers."""
    ZIPF = "zipf"
    ADVERSARIAL = "adversarial"
    COUPLED = "coupled"
    PERTURBED = "perturbed"
    CUSTOM = "custom"  # Hand-written or loaded without a header


@dataclass(frozen=True)
class Trace:
    """
    A finite request sequence over a universe of ``universe_m`` blocks.

    ``kind`` and ``seed`` are provenance only and do not take part in
    equality, so two generators producing the same requests compare equal.
    """
    requests: Tuple[BlockId, ...]
    universe_m: int
    length_t: int
    phase_boundaries: Tuple[int, ...] = ()
    kind: TraceKind = field(default=TraceKind.CUSTOM, compare=False)
    seed: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        if self.universe_m < 1:
            raise ConfigurationError(f"universe_m must be >= 1, got {self.universe_m}")
        if len(self.requests) != self.length_t:
            raise ConfigurationError(
                f"length_t={self.length_t} but {len(self.requests)} requests given"
            )
        for position, block in enumerate(self.requests):
            if not 0 <= block < self.universe_m:
                raise ConfigurationError(
                    f"request {block} at position {position} outside [0, {self.universe_m})"
                )

    @classmethod
    def from_requests(
        cls,
        requests: Iterable[int],
        universe_m: Optional[int] = None,
        kind: TraceKind = TraceKind.CUSTOM,
        seed: Optional[int] = None,
        phase_boundaries: Iterable[int] = (),
    ) -> "Trace":
        """
        Build a trace from a plain sequence of block ids.

        Args:
            requests: Block ids
            universe_m: Universe size; defaults to ``max(requests) + 1``
            kind: Provenance tag
            seed: Provenance seed
            phase_boundaries: Step indices where a new phase starts

        Returns:
            Validated trace
        """
        values = tuple(int(r) for r in requests)
        if universe_m is None:
            universe_m = max(values) + 1 if values else 1
        return cls(
            requests=values,
            universe_m=universe_m,
            length_t=len(values),
            phase_boundaries=tuple(phase_boundaries),
            kind=kind,
            seed=seed,
        )

    def __len__(self) -> int:
        return self.length_t

    def distinct_blocks(self) -> int:
        """Number of distinct blocks that occur in the trace."""
        return len(set(self.requests))


@dataclass(frozen=True)
class ZipfSpec:
    """
    Parameters of the non-stationary Zipf workload.

    With ``cold_tail`` false, requests are drawn over the hot set's ranks only
    and blocks outside the hot set never appear; with ``cold_tail`` true the
    remaining blocks take ranks ``hot_set_size + 1 .. universe_m``.
    """
    universe_m: int = 64
    exponent_alpha: float = 1.2
    hot_set_size: int = 16
    shift_interval: int = 500
    length_t: int = 5000
    cold_tail: bool = False

    def __post_init__(self):
        if self.universe_m < 1:
            raise ConfigurationError(f"universe_m must be >= 1, got {self.universe_m}")
        if not self.exponent_alpha > 0:
            raise ConfigurationError(
                f"exponent_alpha must be > 0, got {self.exponent_alpha}"
            )
        if not 1 <= self.hot_set_size <= self.universe_m:
            raise ConfigurationError(
                f"hot_set_size must be in [1, universe_m={self.universe_m}], "
                f"got {self.hot_set_size}"
            )
        if self.shift_interval < 1:
            raise ConfigurationError(
                f"shift_interval must be >= 1, got {self.shift_interval}"
            )
        if self.length_t < 0:
            raise ConfigurationError(f"length_t must be >= 0, got {self.length_t}")


@dataclass(frozen=True)
class PerturbedTrace:
    """A trace with exactly ``hamming_d`` positions changed from its base."""
    trace: Trace
    hamming_d: int
    flipped_positions: Tuple[int, ...]
