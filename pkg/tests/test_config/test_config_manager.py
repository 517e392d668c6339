"""
Tests for the experiment file parser and the typed configuration.

Run with: PYTHONPATH=src pytest tests/test_config/test_config_manager.py -v
"""

import logging
from pathlib import Path

import pytest

from cache.policy_kind import LRU, PolicyKind, noisy_belady
from config import ConfigManager, ExperimentConfig, resolve_log_level, set_log_level, setup_logging
from config.logging_config import LOG_LEVEL_ENV, ROOT_LOGGER
from utils.error_handler import ConfigurationError
from workload.trace_types import ZipfSpec


@pytest.fixture
def manager():
    return ConfigManager()


def test_defaults_match_typed_defaults(manager):
    """Loading without a file gives the dataclass defaults."""
    assert manager.load() == ExperimentConfig()


def test_default_values():
    config = ExperimentConfig()
    assert config.zipf == ZipfSpec(64, 1.2, 16, 500, 5000, False)
    assert config.k_b_grid == (2, 4, 6, 8, 10, 12, 16)
    assert config.seeds == tuple(range(42, 52))
    assert [p.label for p in config.policies] == ["belady", "lru", "lfu", "fifo", "random"]
    assert config.bounds.k_b == 8
    assert config.bounds.c == 8.0


def test_parse_scalars_lists_and_comments(manager):
    text = """
    # small run
    zipf.universe_m = 32
    zipf.exponent_alpha = 0.9
    zipf.cold_tail = true
    sweep.k_b_grid = 2, 4, 8
    sweep.beta_grid = [0, 0.1]
    sweep.policies = [lru, "noisy_belady(0.5)"]
    output.dir = out/small
    """
    values = manager.parse_text(text)
    assert values["zipf.universe_m"] == 32
    assert values["zipf.exponent_alpha"] == 0.9
    assert values["zipf.cold_tail"] is True
    assert values["sweep.k_b_grid"] == [2, 4, 8]
    assert values["sweep.beta_grid"] == [0, 0.1]
    assert values["sweep.policies"] == ["lru", "noisy_belady(0.5)"]
    assert values["output.dir"] == "out/small"

    config = ExperimentConfig.from_flat(values)
    assert config.policies == (LRU, noisy_belady(0.5))
    assert config.beta_grid == (0.0, 0.1)
    assert config.output_dir == Path("out/small")


def test_unknown_key_reports_line_and_key(manager):
    with pytest.raises(ConfigurationError) as excinfo:
        manager.parse_text("zipf.universe_m = 32\nzipf.bogus = 1\n", source="exp.conf")
    assert excinfo.value.line == 2
    assert excinfo.value.key == "zipf.bogus"
    assert excinfo.value.source == "exp.conf"


def test_duplicate_key_rejected(manager):
    with pytest.raises(ConfigurationError) as excinfo:
        manager.parse_text("bounds.k_b = 4\nbounds.k_b = 8\n")
    assert excinfo.value.line == 2


def test_line_without_equals_rejected(manager):
    with pytest.raises(ConfigurationError) as excinfo:
        manager.parse_text("zipf.universe_m 32\n")
    assert excinfo.value.line == 1


def test_out_of_range_value_rejected(manager):
    with pytest.raises(ConfigurationError):
        manager.parse_text("zipf.hot_set_size = 0\n")
    with pytest.raises(ConfigurationError):
        manager.parse_text("sweep.beta_grid = 0.1, 1.5\n")


def test_wrong_type_rejected(manager):
    with pytest.raises(ConfigurationError):
        manager.parse_text("zipf.universe_m = many\n")
    with pytest.raises(ConfigurationError):
        manager.parse_text("zipf.cold_tail = 1\n")


def test_empty_list_rejected(manager):
    with pytest.raises(ConfigurationError):
        manager.parse_text("sweep.seeds = []\n")


def test_unknown_policy_rejected(manager):
    values = manager.parse_text("sweep.policies = lru, clock\n")
    with pytest.raises(ConfigurationError) as excinfo:
        ExperimentConfig.from_flat(values)
    assert excinfo.value.key == "sweep.policies"


def test_hot_set_larger_than_universe_rejected_on_load(tmp_path, manager):
    path = tmp_path / "exp.conf"
    path.write_text("zipf.universe_m = 8\nzipf.hot_set_size = 16\n")
    with pytest.raises(ConfigurationError) as excinfo:
        manager.load(path)
    assert excinfo.value.source == str(path)


def test_duplicate_seeds_rejected():
    with pytest.raises(ConfigurationError):
        ExperimentConfig(seeds=(1, 1))


def test_missing_file_rejected(tmp_path, manager):
    with pytest.raises(ConfigurationError):
        manager.load(tmp_path / "absent.conf")


def test_formatted_defaults_parse_back(manager):
    """The rendered default file loads to the default configuration."""
    values = manager.parse_text(manager.format_config())
    assert ExperimentConfig.from_flat(values) == ExperimentConfig()


def test_overrides_narrow_grids():
    config = ExperimentConfig().with_overrides(
        seed=7, k_b=4, beta=0.1, policy=PolicyKind.parse("fifo"), output_dir=Path("x"),
    )
    assert config.seeds == (7,)
    assert config.bounds.k_b == 4
    assert config.bounds.c == ExperimentConfig().bounds.c
    assert config.k_b_grid == (4,)
    assert config.beta_grid == (0.1,)
    assert [p.label for p in config.policies] == ["fifo"]
    assert config.output_dir == Path("x")


def test_log_level_precedence(monkeypatch):
    """Command line beats environment beats config file."""
    monkeypatch.setenv(LOG_LEVEL_ENV, "WARNING")
    assert resolve_log_level("debug", "ERROR") == "DEBUG"
    assert resolve_log_level(None, "ERROR") == "WARNING"
    monkeypatch.delenv(LOG_LEVEL_ENV)
    assert resolve_log_level(None, "ERROR") == "ERROR"
    assert resolve_log_level(None, None) == "INFO"


def test_set_log_level_updates_console_handler():
    setup_logging(log_level="INFO", console_output=True)
    set_log_level("error")
    logger = logging.getLogger(ROOT_LOGGER)
    assert logger.level == logging.ERROR
    assert all(h.level == logging.ERROR for h in logger.handlers)
    assert not logger.propagate
    set_log_level("INFO")
