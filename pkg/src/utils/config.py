"""
Configuration loader for drgq.
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from .errors import ConfigError

REPO_ROOT = Path(__file__).resolve().parents[2]
DEFAULT_CONFIG_PATH = str(REPO_ROOT / "config" / "config.yaml")

DEFAULTS: Dict[str, Any] = {
    "numerics": {
        "order_limit": 64,
        "report_width": "1/1000000",
        "interlacing_width": "1/1000000",
    },
    "grids": {
        "q_test_grid": [
            "-3", "-2", "-3/2", "-1", "-9/10", "-3/4", "-1/2", "-1/4",
            "1/4", "1/2", "3/4", "9/10", "1", "3/2", "2", "3",
        ],
        "search_step": "1/100",
    },
    "search": {"krr_max_order": 64, "krr_max_r": 3},
    "verification": {
        "workers": 1,
        "checks": ["regularity", "oracle_agreement", "metric", "classical_type", "rowsum", "local_bound", "krr"],
    },
    "catalog": {"path": "data/catalog.yaml"},
    "logging": {"level": "WARNING", "output_dir": "logs", "enable_langfuse": False, "file": False},
    "output": {"verify_path": None, "report_path": None},
}

# environment variable -> dotted key
ENV_OVERRIDES = {
    "DRGQ_ORDER_LIMIT": ("numerics.order_limit", int),
    "DRGQ_WORKERS": ("verification.workers", int),
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class Config:
    """Configuration manager."""

    def __init__(self, config_path: Optional[str] = None):
        """Load the YAML file over the built-in defaults, then apply environment overrides."""
        load_dotenv()
        self.config_path = config_path or os.getenv("DRGQ_CONFIG") or DEFAULT_CONFIG_PATH
        self.config: Dict[str, Any] = {}
        self.load()

    def load(self):
        """Load configuration from YAML file; a missing file keeps the defaults."""
        config_file = Path(self.config_path)
        data: Dict[str, Any] = {}
        if config_file.exists():
            try:
                with open(config_file, "r") as f:
                    data = yaml.safe_load(f) or {}
            except yaml.YAMLError as exc:
                raise ConfigError(f"malformed config file {self.config_path}: {exc}") from exc
            if not isinstance(data, dict):
                raise ConfigError(f"config file {self.config_path} must contain a mapping")
        self.config = _merge(DEFAULTS, data)
        self._apply_env()

    def _apply_env(self):
        for var, (key, cast) in ENV_OVERRIDES.items():
            raw = os.getenv(var)
            if raw is None or raw == "":
                continue
            try:
                value = cast(raw)
            except ValueError as exc:
                raise ConfigError(f"{var}={raw!r} is not a valid value for {key}") from exc
            self.set(key, value)

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value by dot notation (e.g., 'numerics.order_limit')."""
        value: Any = self.config
        try:
            for k in key.split("."):
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def set(self, key: str, value: Any):
        keys = key.split(".")
        node = self.config
        for k in keys[:-1]:
            node = node.setdefault(k, {})
        node[keys[-1]] = value

    def get_dict(self, section: str) -> Dict[str, Any]:
        """Get entire configuration section."""
        return self.config.get(section, {})

    def __getitem__(self, key: str) -> Any:
        return self.config[key]

    def __repr__(self) -> str:
        return f"Config({self.config_path})"


_config_instance: Optional[Config] = None


def get_config(config_path: Optional[str] = None) -> Config:
    """Get or create global config instance."""
    global _config_instance
    if _config_instance is None:
        _config_instance = Config(config_path)
    return _config_instance


def reset_config():
    global _config_instance
    _config_instance = None


def resolve_path(path: str) -> Path:
    """Relative paths are taken from the working directory when they exist there, else from the repo root."""
    candidate = Path(path)
    if candidate.is_absolute() or candidate.exists():
        return candidate
    return REPO_ROOT / candidate
