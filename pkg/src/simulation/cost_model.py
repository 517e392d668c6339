"""
Closed-form cost of context paging: attention, retrieval and policy terms.

The retrieval term uses a base-2 logarithm of the external memory size.
"""

import math
from dataclasses import dataclass

from utils.error_handler import ConfigurationError


@dataclass(frozen=True)
class CostModelParams:
    """N tokens, context K, block size B, external memory M blocks."""
    n_tokens: int
    context_k: int
    block_b: int
    memory_m: int

    def __post_init__(self):
        for name in ("n_tokens", "context_k", "block_b", "memory_m"):
            if getattr(self, name) < 1:
                raise ConfigurationError(f"{name} must be positive", key=name)
        if self.context_k % self.block_b != 0:
            raise ConfigurationError(
                f"block size B={self.block_b} does not divide context K={self.context_k}"
            )

    @property
    def k_b(self) -> int:
        """Context capacity in blocks."""
        return self.context_k // self.block_b


@dataclass(frozen=True)
class CostBreakdown:
    attention_ops: float
    retrieval_ops: float
    policy_ops: float

    @property
    def total(self) -> float:
        return self.attention_ops + self.retrieval_ops + self.policy_ops


def cost_model(params: CostModelParams) -> CostBreakdown:
    """
    Evaluate ``N*K^2 + (N/B)*K_b*log2(M) + (N/B)*K_b^2``.

    Args:
        params: Validated model parameters
    """
    decisions = params.n_tokens / params.block_b
    return CostBreakdown(
        attention_ops=float(params.n_tokens * params.context_k ** 2),
        retrieval_ops=decisions * params.k_b * math.log2(params.memory_m),
        policy_ops=decisions * params.k_b ** 2,
    )
