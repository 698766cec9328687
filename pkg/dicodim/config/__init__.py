"""Configuration module for dicodim."""

from dicodim.config.loader import get_config_path, load_config, save_config
from dicodim.config.schema import (
    Config,
    DefaultsConfig,
    LimitsConfig,
    OutputConfig,
    ZooConfig,
)

__all__ = [
    "Config",
    "LimitsConfig",
    "OutputConfig",
    "ZooConfig",
    "DefaultsConfig",
    "load_config",
    "save_config",
    "get_config_path",
]
