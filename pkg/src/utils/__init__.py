"""
Utils module for paging-lab.

Contains error handling, the deterministic PRNG and the worker pool.
"""

from .error_handler import (
    ConfigurationError,
    ErrorHandler,
    MalformedMachineError,
    PagingLabError,
    TraceFormatError,
    UsageError,
)
from .rng import SplitMix64, derive_seed

__all__ = [
    'ConfigurationError',
    'ErrorHandler',
    'MalformedMachineError',
    'PagingLabError',
    'SplitMix64',
    'TraceFormatError',
    'UsageError',
    'derive_seed',
]
