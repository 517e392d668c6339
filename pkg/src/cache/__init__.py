"""
Cache module for paging-lab.

Contains the cache state machine, the eviction rules and next-use
preprocessing for offline policies.
"""

from .cache_state import CacheState, StepOutcome
from .next_use import NEVER, NextUseIndex, build_next_use_index
from .policies import PolicyAux, policy_step, select_victim
from .policy_kind import (
    BELADY,
    DEFAULT_POLICIES,
    FIFO,
    LFU,
    LFU_PERSISTENT,
    LRU,
    RANDOM,
    PolicyKind,
    PolicyName,
    noisy_belady,
)

__all__ = [
    'BELADY',
    'CacheState',
    'DEFAULT_POLICIES',
    'FIFO',
    'LFU',
    'LFU_PERSISTENT',
    'LRU',
    'NEVER',
    'NextUseIndex',
    'PolicyAux',
    'PolicyKind',
    'PolicyName',
    'RANDOM',
    'StepOutcome',
    'build_next_use_index',
    'noisy_belady',
    'policy_step',
    'select_victim',
]
