"""
Logging configuration for paging-lab.

All diagnostics go to stderr so that CSV and trace output on stdout stays clean.
"""

import logging
import os
import sys
from typing import Optional

from dotenv import load_dotenv

ROOT_LOGGER = "paging_lab"
LOG_LEVEL_ENV = "PAGING_LAB_LOG_LEVEL"
VALID_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def resolve_log_level(requested: Optional[str] = None, configured: Optional[str] = None) -> str:
    """
    Pick the effective level: command line, then environment, then config file.

    Unknown names fall back to INFO.
    """
    load_dotenv()
    for candidate in (requested, os.environ.get(LOG_LEVEL_ENV), configured):
        if candidate and candidate.upper() in VALID_LEVELS:
            return candidate.upper()
    return "INFO"


def setup_logging(
    log_level: str = "INFO",
    log_file: Optional[str] = None,
    console_output: bool = True
) -> None:
    """
    Set up logging for the lab.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional path of an additional log file
        console_output: Whether to log to stderr
    """
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(getattr(logging, log_level.upper()))
    logger.propagate = False

    logger.handlers.clear()

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    if console_output:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

    if log_file is not None:
        try:
            file_handler = logging.FileHandler(log_file)
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
        except OSError as e:
            logger.warning(f"Failed to set up file logging: {e}")

    logger.debug(f"paging-lab logging initialized at {log_level.upper()}")


def set_log_level(level: str) -> None:
    """Change the level of the root logger and its console handlers."""
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(getattr(logging, level.upper()))
    for handler in logger.handlers:
        if not isinstance(handler, logging.FileHandler):
            handler.setLevel(getattr(logging, level.upper()))
