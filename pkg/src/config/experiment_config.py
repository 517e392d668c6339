"""
Typed experiment configuration built from the flat key map.
"""

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from cache.policy_kind import DEFAULT_POLICIES, PolicyKind
from utils.error_handler import ConfigurationError
from workload.trace_types import ZipfSpec


@dataclass(frozen=True)
class BoundSuiteConfig:
    """Parameters of the bound-validation suite."""
    k_b: int = 8
    c: float = 8.0
    rho_grid: Tuple[float, ...] = (0.8, 0.9, 0.95, 1.0)
    p_grid: Tuple[float, ...] = (0.0, 0.25, 0.5, 0.75, 1.0)
    lower_bound_k_grid: Tuple[int, ...] = (2, 4, 8)
    lower_bound_length: int = 5000
    beta_true_grid: Tuple[float, ...] = (0.0, 0.1, 0.2, 0.4)
    estimation_policies: Tuple[PolicyKind, ...] = tuple(
        PolicyKind.parse(label) for label in ("lru", "fifo")
    )


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything a sweep, validation or reproduction run needs."""
    zipf: ZipfSpec = field(default_factory=ZipfSpec)
    k_b_grid: Tuple[int, ...] = (2, 4, 6, 8, 10, 12, 16)
    beta_grid: Tuple[float, ...] = (0.0, 0.02, 0.05, 0.1, 0.15, 0.2, 0.3, 0.4, 0.5)
    policies: Tuple[PolicyKind, ...] = DEFAULT_POLICIES
    seeds: Tuple[int, ...] = tuple(range(42, 52))
    output_dir: Path = Path("results")
    window: int = 100
    bounds: BoundSuiteConfig = field(default_factory=BoundSuiteConfig)
    log_level: str = "INFO"

    def __post_init__(self):
        for name in ("k_b_grid", "beta_grid", "policies", "seeds"):
            if len(getattr(self, name)) == 0:
                raise ConfigurationError("grid must not be empty", key=name)
        if len(set(self.seeds)) != len(self.seeds):
            raise ConfigurationError("seeds must be distinct", key="sweep.seeds")

    @classmethod
    def from_flat(cls, values: Dict[str, Any]) -> "ExperimentConfig":
        """
        Build a configuration from validated dotted keys.

        Args:
            values: Complete key map as produced by ``ConfigSchema.get_default_config``
        """
        zipf = ZipfSpec(
            universe_m=values["zipf.universe_m"],
            exponent_alpha=float(values["zipf.exponent_alpha"]),
            hot_set_size=values["zipf.hot_set_size"],
            shift_interval=values["zipf.shift_interval"],
            length_t=values["zipf.length_t"],
            cold_tail=values["zipf.cold_tail"],
        )
        bounds = BoundSuiteConfig(
            k_b=values["bounds.k_b"],
            c=float(values["bounds.c"]),
            rho_grid=_floats(values["bounds.rho_grid"]),
            p_grid=_floats(values["bounds.p_grid"]),
            lower_bound_k_grid=tuple(values["bounds.lower_bound_k_grid"]),
            lower_bound_length=values["bounds.lower_bound_length"],
            beta_true_grid=_floats(values["bounds.beta_true_grid"]),
            estimation_policies=_policies(values["bounds.estimation_policies"], "bounds.estimation_policies"),
        )
        return cls(
            zipf=zipf,
            k_b_grid=tuple(values["sweep.k_b_grid"]),
            beta_grid=_floats(values["sweep.beta_grid"]),
            policies=_policies(values["sweep.policies"], "sweep.policies"),
            seeds=tuple(values["sweep.seeds"]),
            output_dir=Path(values["output.dir"]),
            window=values["working_set.window"],
            bounds=bounds,
            log_level=values["logging.level"],
        )

    def with_overrides(
        self,
        seed: Optional[int] = None,
        output_dir: Optional[Path] = None,
        k_b: Optional[int] = None,
        beta: Optional[float] = None,
        policy: Optional[PolicyKind] = None,
    ) -> "ExperimentConfig":
        """Narrow the configuration with command-line flags."""
        updated = self
        if seed is not None:
            updated = replace(updated, seeds=(seed,))
        if output_dir is not None:
            updated = replace(updated, output_dir=Path(output_dir))
        if k_b is not None:
            updated = replace(updated, k_b_grid=(k_b,), bounds=replace(updated.bounds, k_b=k_b))
        if beta is not None:
            updated = replace(updated, beta_grid=(beta,))
        if policy is not None:
            updated = replace(updated, policies=(policy,))
        return updated


def _floats(values) -> Tuple[float, ...]:
    return tuple(float(v) for v in values)


def _policies(labels, key: str) -> Tuple[PolicyKind, ...]:
    try:
        return tuple(PolicyKind.parse(label) for label in labels)
    except ConfigurationError as e:
        raise ConfigurationError(e.message, key=key) from None
