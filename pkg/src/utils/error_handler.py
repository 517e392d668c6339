"""
Error handling utilities for paging-lab.

Defines the exception hierarchy used across the laboratory and a centralized
handler that turns exceptions into log records and process exit codes.
"""

import logging
import traceback
from typing import Optional

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_VALIDATION_FAILED = 1
EXIT_USAGE = 2


class PagingLabError(Exception):
    """Base class for every error raised by paging-lab."""


class ConfigurationError(PagingLabError):
    """
    Invalid parameters or an unreadable configuration source.

    Args:
        message: Human readable description
        source: File the problem was found in, if any
        line: 1-based line number inside ``source``
        key: Configuration key involved
    """

    def __init__(
        self,
        message: str,
        source: Optional[str] = None,
        line: Optional[int] = None,
        key: Optional[str] = None,
    ):
        self.message = message
        self.source = source
        self.line = line
        self.key = key
        super().__init__(self._format())

    def _format(self) -> str:
        location = ""
        if self.source is not None:
            location = self.source
            if self.line is not None:
                location += f":{self.line}"
            location += ": "
        if self.key is not None:
            return f"{location}key '{self.key}': {self.message}"
        return f"{location}{self.message}"


class TraceFormatError(ConfigurationError):
    """A trace file could not be parsed."""


class UsageError(PagingLabError):
    """An operation was called outside its contract."""


class MalformedMachineError(PagingLabError):
    """A Turing machine definition is incomplete or inconsistent."""


class ErrorHandler:
    """
    Centralized error handler for paging-lab.

    Logs errors with a context tag and maps them to the exit codes used by
    the command line.
    """

    def __init__(self):
        """Initialize the error handler."""
        self.logger = logging.getLogger("paging_lab.error_handler")

    def handle_error(
        self,
        error: str | Exception,
        context: Optional[str] = None,
        log_level: str = "ERROR",
    ) -> int:
        """
        Log an error and return the exit code it maps to.

        Args:
            error: Error message or exception
            context: Additional context about where the error occurred
            log_level: Logging level for the error

        Returns:
            Process exit code
        """
        if isinstance(error, Exception):
            error_msg = str(error)
            error_details = "".join(
                traceback.format_exception(type(error), error, error.__traceback__)
            )
        else:
            error_msg = str(error)
            error_details = None

        if context:
            error_msg = f"[{context}] {error_msg}"

        log_method = getattr(self.logger, log_level.lower())
        log_method(error_msg)

        if error_details:
            self.logger.debug(f"Error details: {error_details}")

        return self.exit_code_for(error)

    @staticmethod
    def exit_code_for(error: str | Exception) -> int:
        """
        Map an error to a process exit code.

        Args:
            error: Error message or exception

        Returns:
            ``EXIT_USAGE`` for usage and configuration errors, ``EXIT_FAILURE``
            for everything else
        """
        if isinstance(error, (ConfigurationError, UsageError, MalformedMachineError)):
            return EXIT_USAGE
        return EXIT_FAILURE
