#!/usr/bin/env python3
"""
Print the default experiment file.

Usage: python scripts/show_config.py [config-file]

With a file argument the file is parsed and the effective values are shown;
the output can be saved and edited as a starting point for new experiments.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from config.config_manager import ConfigManager  # noqa: E402
from utils.error_handler import ConfigurationError  # noqa: E402


def main() -> int:
    """Show the default or the effective configuration."""
    config_manager = ConfigManager()
    values = None
    if len(sys.argv) > 1:
        try:
            with open(sys.argv[1], encoding="utf-8") as handle:
                values = config_manager.parse_text(handle.read(), source=sys.argv[1])
        except (OSError, ConfigurationError) as e:
            print(f"error: {e}", file=sys.stderr)
            return 2

    print(config_manager.format_config(values), end="")

    schema = config_manager.get_schema()
    categories = sorted({s.category for s in schema.settings.values()})
    counts = ", ".join(f"{c} ({len(schema.get_settings_by_category(c))})" for c in categories)
    print(f"# {len(schema.settings)} keys: {counts}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
