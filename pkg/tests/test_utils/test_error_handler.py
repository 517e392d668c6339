"""
Tests for the error hierarchy and exit-code mapping.

Run with: PYTHONPATH=src pytest tests/test_utils/test_error_handler.py -v
"""

from utils.error_handler import (
    EXIT_FAILURE,
    EXIT_USAGE,
    ConfigurationError,
    ErrorHandler,
    MalformedMachineError,
    TraceFormatError,
    UsageError,
)


def test_configuration_error_names_location_and_key():
    """Source, line and key all show up in the message."""
    error = ConfigurationError("unknown key", source="exp.conf", line=3, key="zipf.bogus")
    assert str(error) == "exp.conf:3: key 'zipf.bogus': unknown key"
    assert error.line == 3
    assert error.key == "zipf.bogus"


def test_configuration_error_without_location():
    assert str(ConfigurationError("bad value")) == "bad value"


def test_trace_format_error_is_a_configuration_error():
    assert isinstance(TraceFormatError("empty"), ConfigurationError)


def test_usage_and_configuration_errors_map_to_usage_exit():
    """Caller mistakes exit with status 2."""
    assert ErrorHandler.exit_code_for(UsageError("x")) == EXIT_USAGE
    assert ErrorHandler.exit_code_for(ConfigurationError("x")) == EXIT_USAGE


def test_malformed_machine_maps_to_usage_exit():
    assert ErrorHandler.exit_code_for(MalformedMachineError("x")) == EXIT_USAGE


def test_other_errors_map_to_failure_exit():
    assert ErrorHandler.exit_code_for(RuntimeError("x")) == EXIT_FAILURE


def test_handle_error_returns_exit_code():
    """handle_error returns the mapped code for exceptions and plain messages."""
    handler = ErrorHandler()
    assert handler.handle_error(UsageError("no trace"), context="simulate") == EXIT_USAGE
    assert handler.handle_error("something broke") == EXIT_FAILURE
