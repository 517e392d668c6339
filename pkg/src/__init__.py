"""
paging-lab - deterministic paging-simulation laboratory

Trace generation, eviction policies, exact oracles, a blocked-tape Turing
machine cost simulator and empirical checks of paging bounds.
"""

__version__ = "0.1.0"
__author__ = "paging-lab developers"
__description__ = "Deterministic paging-simulation laboratory"
