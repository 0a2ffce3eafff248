"""
Settings
Configuration management for CVSS Aggregator.

Values come from, highest priority first:
1. explicit CLI flags
2. the YAML file given by --config
3. the Config dataclass defaults
"""

import logging
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Optional

import yaml

from cvss_aggregator.factors import INTERPOLATIONS
from cvss_aggregator.ingest.schemas import CONFIG_SCHEMA, schema_issues
from cvss_aggregator.models import ConfigError

logger = logging.getLogger(__name__)


# (section, key) in the YAML file -> Config field
FILE_KEYS: dict[tuple[str, str], str] = {
    ("logging", "level"): "log_level",
    ("aggregation", "sigma"): "sigma_kind",
    ("aggregation", "interpolation"): "interpolation",
    ("report", "format"): "report_format",
    ("simulation", "size"): "sim_size",
    ("simulation", "seed"): "sim_seed",
    ("simulation", "shape"): "sim_shape",
}


@dataclass(frozen=True)
class Config:
    """Aggregator configuration."""
    log_level: str = "WARNING"
    sigma_kind: str = "arithmetic"
    interpolation: str = "linear"
    report_format: str = "text"
    sim_size: int = 64
    sim_seed: int = 0
    sim_shape: str | None = None  # None runs every distribution

    def with_overrides(self, **overrides: Any) -> "Config":
        """Copy with the non-None overrides applied."""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ConfigError(f"unknown config field(s): {', '.join(sorted(unknown))}")
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def load_config_file(path: str | Path) -> Config:
    """
    Read and validate a YAML config file.

    Raises:
        ConfigError: unreadable file, bad YAML or schema violations
    """
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"invalid YAML in config file {path}: {e}") from e

    if data is None:
        data = {}
    issues = schema_issues(data, CONFIG_SCHEMA)
    if issues:
        raise ConfigError(f"{path}: " + "; ".join(issue.message for issue in issues))

    values = {
        field_name: data[section][key]
        for (section, key), field_name in FILE_KEYS.items()
        if key in (data.get(section) or {})
    }
    interpolation = values.get("interpolation")
    if interpolation is not None and interpolation not in INTERPOLATIONS:
        raise ConfigError(
            f"{path}: unknown interpolation {interpolation!r}, "
            f"expected one of {sorted(INTERPOLATIONS)}"
        )
    logger.debug(f"Loaded config {path}: {values}")
    return Config(**values)


class ConfigManager:
    """Configuration manager - loads and provides config."""

    _instance: Optional["ConfigManager"] = None

    def __init__(self):
        self._config: Optional[Config] = None

    @classmethod
    def get_instance(cls) -> "ConfigManager":
        """Get singleton instance."""
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        cls._instance = None

    def load(self, path: str | Path | None = None, **overrides: Any) -> Config:
        """
        Load configuration from an optional file, then apply flag overrides.

        Args:
            path: YAML config file, or None for defaults
            overrides: Config fields given explicitly; None values are ignored
        """
        base = load_config_file(path) if path is not None else Config()
        self._config = base.with_overrides(**overrides)
        return self._config

    def get(self) -> Config:
        """Get current configuration."""
        if self._config is None:
            # Create default config if not loaded
            self._config = Config()
        return self._config
