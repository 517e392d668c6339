"""
Workload module for paging-lab.

Generates, perturbs, compares and stores block-request traces.
"""

from .generators import (
    ZipfTraceGenerator,
    flip_count,
    gen_adversarial_trace,
    gen_coupled_trace,
    gen_zipf_trace,
    hamming_distance,
    perturb_trace,
    recall_perturb_trace,
)
from .trace_io import format_trace, parse_trace, read_trace, write_trace
from .trace_types import BlockId, PerturbedTrace, Trace, TraceKind, ZipfSpec

__all__ = [
    'BlockId',
    'PerturbedTrace',
    'Trace',
    'TraceKind',
    'ZipfSpec',
    'ZipfTraceGenerator',
    'flip_count',
    'format_trace',
    'gen_adversarial_trace',
    'gen_coupled_trace',
    'gen_zipf_trace',
    'hamming_distance',
    'parse_trace',
    'perturb_trace',
    'read_trace',
    'recall_perturb_trace',
    'write_trace',
]
