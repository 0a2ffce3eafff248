"""
Config Module
Configuration management.
"""

from .settings import ConfigManager, Config, load_config_file

__all__ = [
    "ConfigManager",
    "Config",
    "load_config_file",
]
