"""
Configuration loading: config.yaml merged over built-in defaults.
"""

import copy
import os
from typing import Optional

import yaml

DEFAULT_CONFIG = {
    "verification": {
        "expand_limit": 20000,
        "oracle_max_monomials": 2000,
        "lm_search_limit": 1000000,
        "workers": 1,
    },
    "oracle": {
        "max_size": 3,
        "pairs": [[1, 1], [2, 1], [1, 2], [2, 2]],
    },
    "output": {
        "format": "json",
        "indent": 2,
    },
    "logging": {
        "level": "INFO",
    },
}


def _merge(base: dict, override: dict) -> dict:
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value
    return base


def load_config(config_path: Optional[str] = "config.yaml") -> dict:
    """
    Load config.yaml; a missing file yields the defaults.

    Args:
        config_path: Path to a YAML file

    Returns:
        Nested configuration dict
    """
    config = copy.deepcopy(DEFAULT_CONFIG)
    if config_path and os.path.exists(config_path):
        with open(config_path, "r") as f:
            loaded = yaml.safe_load(f) or {}
        if not isinstance(loaded, dict):
            raise ValueError(f"{config_path} must hold a mapping, got {type(loaded).__name__}")
        _merge(config, loaded)
    return config
