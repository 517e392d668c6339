"""
Turing machine module for paging-lab.

Simulates single-tape machines over a blocked, address-indexed tape store.
"""

from .blocked_tape import BlockedTape
from .machine import (
    BUILTIN_MACHINES,
    BUILTIN_PREFIX,
    Move,
    TmSpec,
    Transition,
    builtin_machine,
    parse_machine,
    parse_machine_file,
)
from .simulator import TmRunResult, simulate_tm

__all__ = [
    'BUILTIN_MACHINES',
    'BUILTIN_PREFIX',
    'BlockedTape',
    'Move',
    'TmRunResult',
    'TmSpec',
    'Transition',
    'builtin_machine',
    'parse_machine',
    'parse_machine_file',
    'simulate_tm',
]
