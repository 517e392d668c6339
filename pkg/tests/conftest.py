"""
Pytest configuration file for paging-lab tests.

This file sets up the Python path so that tests can import modules from the src/ directory.
"""

import sys
from pathlib import Path

import pytest

# Add src/ to Python path for imports
project_root = Path(__file__).parent.parent
src_path = project_root / "src"
sys.path.insert(0, str(src_path))

from workload.trace_types import ZipfSpec  # noqa: E402


@pytest.fixture(autouse=True)
def sequential_workers(monkeypatch):
    """Run every sweep in-process unless a test asks for workers explicitly."""
    monkeypatch.setenv("PAGING_LAB_THREADS", "0")


@pytest.fixture(scope="session")
def small_spec():
    """A short Zipf workload that keeps sweeps fast."""
    return ZipfSpec(universe_m=24, exponent_alpha=1.2, hot_set_size=10, shift_interval=200, length_t=800)


@pytest.fixture(scope="session")
def default_spec():
    """The default workload used by the reproduction checks."""
    return ZipfSpec()
