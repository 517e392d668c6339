#!/usr/bin/env python3
"""
Configuration Schema for paging-lab.

Declares every experiment key with its type, default and validation rules.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Union


class SettingType(Enum):
    """Defines the data type of a setting."""
    INTEGER = "integer"
    FLOAT = "float"
    STRING = "string"
    BOOLEAN = "boolean"
    ARRAY = "array"


@dataclass
class SettingDefinition:
    """Definition of a configuration setting."""
    key: str
    type: SettingType
    default: Any
    description: str
    min_value: Optional[Union[int, float]] = None
    max_value: Optional[Union[int, float]] = None
    allowed_values: Optional[List[Any]] = None
    element_type: Optional[SettingType] = None  # ARRAY only
    unit: Optional[str] = None
    category: str = "general"


def _is_type(value: Any, setting_type: SettingType) -> bool:
    # bool is an int subclass; keep them apart
    if setting_type == SettingType.INTEGER:
        return isinstance(value, int) and not isinstance(value, bool)
    if setting_type == SettingType.FLOAT:
        return isinstance(value, (int, float)) and not isinstance(value, bool)
    if setting_type == SettingType.STRING:
        return isinstance(value, str)
    if setting_type == SettingType.BOOLEAN:
        return isinstance(value, bool)
    return isinstance(value, list)


class ConfigSchema:
    """Defines the complete configuration schema for paging-lab."""

    def __init__(self):
        """Initialize the configuration schema."""
        self.settings: Dict[str, SettingDefinition] = {}
        self._define_schema()

    def _define_schema(self) -> None:
        """Define all configuration settings with their rules."""

        # =============================================================================
        # WORKLOAD
        # =============================================================================

        self._add_setting(SettingDefinition(
            key="zipf.universe_m",
            type=SettingType.INTEGER,
            default=64,
            description="Number of distinct blocks in external memory",
            min_value=1,
            unit="blocks",
            category="zipf"
        ))

        self._add_setting(SettingDefinition(
            key="zipf.exponent_alpha",
            type=SettingType.FLOAT,
            default=1.2,
            description="Zipf exponent of the hot-set popularity",
            min_value=1e-9,
            category="zipf"
        ))

        self._add_setting(SettingDefinition(
            key="zipf.hot_set_size",
            type=SettingType.INTEGER,
            default=16,
            description="Blocks in the hot set of each phase",
            min_value=1,
            unit="blocks",
            category="zipf"
        ))

        self._add_setting(SettingDefinition(
            key="zipf.shift_interval",
            type=SettingType.INTEGER,
            default=500,
            description="Requests between hot-set reshuffles",
            min_value=1,
            unit="requests",
            category="zipf"
        ))

        self._add_setting(SettingDefinition(
            key="zipf.length_t",
            type=SettingType.INTEGER,
            default=5000,
            description="Trace length",
            min_value=1,
            unit="requests",
            category="zipf"
        ))

        self._add_setting(SettingDefinition(
            key="zipf.cold_tail",
            type=SettingType.BOOLEAN,
            default=False,
            description="Rank the whole universe instead of the hot set only",
            category="zipf"
        ))

        # =============================================================================
        # SWEEP
        # =============================================================================

        self._add_setting(SettingDefinition(
            key="sweep.k_b_grid",
            type=SettingType.ARRAY,
            element_type=SettingType.INTEGER,
            default=[2, 4, 6, 8, 10, 12, 16],
            description="Cache capacities to sweep",
            min_value=1,
            unit="blocks",
            category="sweep"
        ))

        self._add_setting(SettingDefinition(
            key="sweep.beta_grid",
            type=SettingType.ARRAY,
            element_type=SettingType.FLOAT,
            default=[0, 0.02, 0.05, 0.1, 0.15, 0.2, 0.3, 0.4, 0.5],
            description="Perturbation fractions to sweep",
            min_value=0.0,
            max_value=1.0,
            category="sweep"
        ))

        self._add_setting(SettingDefinition(
            key="sweep.policies",
            type=SettingType.ARRAY,
            element_type=SettingType.STRING,
            default=["belady", "lru", "lfu", "fifo", "random"],
            description="Policy labels to sweep",
            category="sweep"
        ))

        self._add_setting(SettingDefinition(
            key="sweep.seeds",
            type=SettingType.ARRAY,
            element_type=SettingType.INTEGER,
            default=list(range(42, 52)),
            description="Seeds; each one draws an independent trace",
            min_value=0,
            max_value=2 ** 64 - 1,
            category="sweep"
        ))

        self._add_setting(SettingDefinition(
            key="working_set.window",
            type=SettingType.INTEGER,
            default=100,
            description="Window of the working-set measurement",
            min_value=1,
            unit="requests",
            category="working_set"
        ))

        # =============================================================================
        # BOUND SUITE
        # =============================================================================

        self._add_setting(SettingDefinition(
            key="bounds.k_b",
            type=SettingType.INTEGER,
            default=8,
            description="Capacity used by the bound checks",
            min_value=1,
            unit="blocks",
            category="bounds"
        ))

        self._add_setting(SettingDefinition(
            key="bounds.c",
            type=SettingType.FLOAT,
            default=8.0,
            description="Competitive constant of the robustness bound",
            min_value=1.0,
            category="bounds"
        ))

        self._add_setting(SettingDefinition(
            key="bounds.rho_grid",
            type=SettingType.ARRAY,
            element_type=SettingType.FLOAT,
            default=[0.8, 0.9, 0.95, 1.0],
            description="Recall levels",
            min_value=0.0,
            max_value=1.0,
            category="bounds"
        ))

        self._add_setting(SettingDefinition(
            key="bounds.p_grid",
            type=SettingType.ARRAY,
            element_type=SettingType.FLOAT,
            default=[0, 0.25, 0.5, 0.75, 1],
            description="Noisy-Belady accuracies",
            min_value=0.0,
            max_value=1.0,
            category="bounds"
        ))

        self._add_setting(SettingDefinition(
            key="bounds.lower_bound_k_grid",
            type=SettingType.ARRAY,
            element_type=SettingType.INTEGER,
            default=[2, 4, 8],
            description="Capacities for the adversarial lower bound",
            min_value=1,
            category="bounds"
        ))

        self._add_setting(SettingDefinition(
            key="bounds.lower_bound_length",
            type=SettingType.INTEGER,
            default=5000,
            description="Length of the adversarial traces",
            min_value=1,
            unit="requests",
            category="bounds"
        ))

        self._add_setting(SettingDefinition(
            key="bounds.beta_true_grid",
            type=SettingType.ARRAY,
            element_type=SettingType.FLOAT,
            default=[0, 0.1, 0.2, 0.4],
            description="Coupling strengths for sensitivity estimation",
            min_value=0.0,
            max_value=1.0,
            category="bounds"
        ))

        self._add_setting(SettingDefinition(
            key="bounds.estimation_policies",
            type=SettingType.ARRAY,
            element_type=SettingType.STRING,
            default=["lru", "fifo"],
            description="Online policies whose coupled traces are compared",
            category="bounds"
        ))

        # =============================================================================
        # OUTPUT
        # =============================================================================

        self._add_setting(SettingDefinition(
            key="output.dir",
            type=SettingType.STRING,
            default="results",
            description="Directory receiving CSV and trace files",
            category="output"
        ))

        self._add_setting(SettingDefinition(
            key="logging.level",
            type=SettingType.STRING,
            default="INFO",
            description="Log level when neither --log-level nor PAGING_LAB_LOG_LEVEL is set",
            allowed_values=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
            category="logging"
        ))

    def _add_setting(self, setting: SettingDefinition) -> None:
        """Add a setting definition to the schema."""
        self.settings[setting.key] = setting

    def get_setting(self, key: str) -> Optional[SettingDefinition]:
        """Get a setting definition by key."""
        return self.settings.get(key)

    def get_settings_by_category(self, category: str) -> List[SettingDefinition]:
        """Get all settings in a specific category."""
        return [
            setting for setting in self.settings.values()
            if setting.category == category
        ]

    def _check_scalar(self, setting: SettingDefinition, value: Any, setting_type: SettingType) -> Optional[str]:
        if not _is_type(value, setting_type):
            return f"must be of type {setting_type.value}"
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            if setting.min_value is not None and value < setting.min_value:
                return f"must be >= {setting.min_value}"
            if setting.max_value is not None and value > setting.max_value:
                return f"must be <= {setting.max_value}"
        if setting.allowed_values is not None and value not in setting.allowed_values:
            return f"must be one of: {setting.allowed_values}"
        return None

    def validate_value(self, key: str, value: Any) -> tuple[bool, Optional[str]]:
        """
        Validate a value against the schema.

        Returns:
            (is_valid, error_message)
        """
        setting = self.get_setting(key)
        if not setting:
            return False, f"unknown setting: {key}"

        if setting.type != SettingType.ARRAY:
            error = self._check_scalar(setting, value, setting.type)
            return (error is None), error

        if not isinstance(value, list):
            return False, "must be a list"
        if not value:
            return False, "must not be empty"
        for element in value:
            error = self._check_scalar(setting, element, setting.element_type or SettingType.STRING)
            if error:
                return False, f"element {element!r} {error}"
        return True, None

    def get_default_config(self) -> Dict[str, Any]:
        """Get the complete default configuration as a flat key map."""
        return {
            key: list(setting.default) if isinstance(setting.default, list) else setting.default
            for key, setting in self.settings.items()
        }
