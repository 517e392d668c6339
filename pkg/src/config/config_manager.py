#!/usr/bin/env python3
"""
Configuration Manager for paging-lab.

Reads the flat, line-oriented experiment file::

    # comment
    zipf.exponent_alpha = 1.2
    sweep.k_b_grid = 2, 4, 8
    sweep.policies = [lru, "noisy_belady(0.5)"]

Values are JSON5 literals; bare words are taken as strings and list keys
also accept comma-separated values without brackets.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import json5

from utils.error_handler import ConfigurationError

from .config_schema import ConfigSchema, SettingType
from .experiment_config import ExperimentConfig


def _parse_literal(text: str) -> Any:
    text = text.strip()
    try:
        return json5.loads(text)
    except ValueError:
        return text


class ConfigManager:
    """Parses experiment files against the schema."""

    def __init__(self):
        """Initialize the configuration manager."""
        self.logger = logging.getLogger("paging_lab.config")
        self.schema = ConfigSchema()

    def get_default_config(self) -> Dict[str, Any]:
        """Get the default flat configuration from schema."""
        return self.schema.get_default_config()

    def _parse_value(self, key: str, raw: str, source: str, line_no: int) -> Any:
        setting = self.schema.get_setting(key)
        if setting is None:
            raise ConfigurationError("unknown key", source=source, line=line_no, key=key)
        if not raw:
            raise ConfigurationError("missing value", source=source, line=line_no, key=key)

        value: Any
        if setting.type == SettingType.ARRAY:
            value = _parse_literal(raw)
            if not isinstance(value, list):
                # bare words inside brackets are not valid JSON5
                inner = raw[1:-1] if raw.startswith("[") and raw.endswith("]") else raw
                if raw.startswith("[") != raw.endswith("]"):
                    raise ConfigurationError(f"malformed list '{raw}'", source=source, line=line_no, key=key)
                value = [_parse_literal(part) for part in inner.split(",") if part.strip()]
        else:
            value = _parse_literal(raw)

        is_valid, error_msg = self.schema.validate_value(key, value)
        if not is_valid:
            raise ConfigurationError(error_msg or "invalid value", source=source, line=line_no, key=key)
        return value

    def parse_text(self, text: str, source: str = "<string>") -> Dict[str, Any]:
        """
        Parse config text into a complete flat key map.

        Keys missing from the text keep their defaults.

        Raises:
            ConfigurationError: On a malformed line, an unknown or duplicate
                key, or a value the schema rejects
        """
        values = self.get_default_config()
        seen: Dict[str, int] = {}

        for line_no, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ConfigurationError(f"expected 'key = value', got '{stripped}'", source=source, line=line_no)
            key, raw = (part.strip() for part in stripped.split("=", 1))
            if key in seen:
                raise ConfigurationError(
                    f"duplicate key (first set on line {seen[key]})",
                    source=source, line=line_no, key=key,
                )
            seen[key] = line_no
            values[key] = self._parse_value(key, raw, source, line_no)

        self.logger.debug(f"Parsed {len(seen)} keys from {source}")
        return values

    def load(self, path: Optional[Union[str, Path]] = None) -> ExperimentConfig:
        """
        Load an experiment configuration, or the defaults when ``path`` is None.

        Raises:
            ConfigurationError: If the file is unreadable or invalid
        """
        if path is None:
            return ExperimentConfig.from_flat(self.get_default_config())

        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigurationError(f"cannot read config file: {e}", source=str(path)) from e

        values = self.parse_text(text, source=str(path))
        try:
            config = ExperimentConfig.from_flat(values)
        except ConfigurationError as e:
            raise ConfigurationError(e.message, source=str(path), key=e.key) from None
        self.logger.info(f"Configuration loaded from {path}")
        return config

    def format_config(self, values: Optional[Dict[str, Any]] = None) -> str:
        """Render a flat key map back into the file format."""
        values = values if values is not None else self.get_default_config()
        lines = []
        for key, setting in self.schema.settings.items():
            value = values[key]
            if setting.type == SettingType.ARRAY:
                text = ", ".join(str(v) for v in value)
            elif setting.type == SettingType.BOOLEAN:
                text = "true" if value else "false"
            else:
                text = str(value)
            lines.append(f"# {setting.description}")
            lines.append(f"{key} = {text}")
        return "\n".join(lines) + "\n"

    def get_schema(self) -> ConfigSchema:
        """Get the configuration schema."""
        return self.schema
