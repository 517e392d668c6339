"""
Worker pool used by sweeps and the validation suite.

Results always come back in task order, so output files do not depend on how
many workers ran them.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

import psutil
from dotenv import load_dotenv

from .error_handler import ConfigurationError

THREADS_ENV_VAR = "PAGING_LAB_THREADS"

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger("paging_lab.utils.parallel")


def resolve_worker_count(override: Optional[int] = None) -> int:
    """
    Decide how many worker processes a sweep may use.

    Args:
        override: Explicit count; takes precedence over the environment

    Returns:
        Number of workers, 0 meaning run in the calling process
    """
    if override is not None:
        if override < 0:
            raise ConfigurationError("worker count must be >= 0", key=THREADS_ENV_VAR)
        return override

    load_dotenv()
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return psutil.cpu_count(logical=False) or 1

    try:
        count = int(raw)
    except ValueError:
        raise ConfigurationError(
            f"expected a non-negative integer, got {raw!r}", key=THREADS_ENV_VAR
        ) from None
    if count < 0:
        raise ConfigurationError("must be >= 0", key=THREADS_ENV_VAR)
    return count


def run_tasks(
    fn: Callable[[T], R],
    tasks: Sequence[T],
    workers: Optional[int] = None,
) -> List[R]:
    """
    Apply ``fn`` to every task, possibly in parallel.

    Args:
        fn: Picklable top-level function
        tasks: Picklable task descriptions
        workers: Worker count; resolved from the environment when None

    Returns:
        Results in the same order as ``tasks``
    """
    count = resolve_worker_count(workers)
    if count <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]

    count = min(count, len(tasks))
    logger.debug(f"Running {len(tasks)} tasks on {count} worker processes")
    chunksize = max(1, len(tasks) // (count * 4))
    with ProcessPoolExecutor(max_workers=count) as pool:
        return list(pool.map(fn, tasks, chunksize=chunksize))
