"""
Configuration management module for paging-lab.

This module handles:
- The schema of every experiment key
- Parsing the flat ``key = value`` experiment file
- The typed ExperimentConfig
- Logging setup
"""

from .config_manager import ConfigManager
from .config_schema import ConfigSchema, SettingDefinition, SettingType
from .experiment_config import BoundSuiteConfig, ExperimentConfig
from .logging_config import resolve_log_level, set_log_level, setup_logging

__all__ = [
    'BoundSuiteConfig',
    'ConfigManager',
    'ConfigSchema',
    'ExperimentConfig',
    'SettingDefinition',
    'SettingType',
    'resolve_log_level',
    'set_log_level',
    'setup_logging',
]
