"""
Configuration settings for the application.
"""
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Union

import yaml

from ..utils.exceptions import ConfigurationError


@dataclass
class AppSettings:
    """Application settings."""

    # Expansion settings
    default_order: int = 32
    associativity_degree_cap: int = 8

    # Prime sweeps
    default_p_max: int = 50
    workers: int = 1

    # Trace cache file; None keeps traces in memory only
    cache_path: Optional[Path] = None

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        if self.default_order < 4:
            raise ConfigurationError(f"default_order must be at least 4, got {self.default_order}")
        if self.associativity_degree_cap < 1:
            raise ConfigurationError("associativity_degree_cap must be positive")
        if self.default_p_max < 2:
            raise ConfigurationError("default_p_max must be at least 2")
        if self.workers < 1:
            raise ConfigurationError("workers must be positive")

    def to_dict(self) -> Dict[str, Union[str, int, None]]:
        """Convert settings to dictionary."""
        return {
            "default_order": self.default_order,
            "associativity_degree_cap": self.associativity_degree_cap,
            "default_p_max": self.default_p_max,
            "workers": self.workers,
            "cache_path": str(self.cache_path) if self.cache_path else None,
        }

    def save_to_file(self, path: Path) -> None:
        """Save settings to YAML file."""
        with open(path, "w") as f:
            yaml.dump(self.to_dict(), f, default_flow_style=False)

    def load_from_file(self, path: Path) -> None:
        """
        Load settings from YAML file.

        Raises:
            ConfigurationError: if the file is not a YAML mapping or a value is invalid
        """
        if not path.exists():
            return

        try:
            with open(path) as f:
                data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid settings file {path}: {str(e)}") from e
        if not isinstance(data, dict):
            raise ConfigurationError(f"Settings file {path} must hold a mapping")

        try:
            if "default_order" in data:
                self.default_order = int(data["default_order"])

            if "associativity_degree_cap" in data:
                self.associativity_degree_cap = int(data["associativity_degree_cap"])

            if "default_p_max" in data:
                self.default_p_max = int(data["default_p_max"])

            if "workers" in data:
                self.workers = int(data["workers"])

            if "cache_path" in data:
                self.cache_path = Path(data["cache_path"]) if data["cache_path"] else None
        except (TypeError, ValueError) as e:
            raise ConfigurationError(f"Invalid value in {path}: {str(e)}") from e

        self.validate()

    @classmethod
    def from_env(cls) -> "AppSettings":
        """Create settings from environment variables."""
        settings = cls()

        try:
            if cache_path := os.getenv("FORMALE_CACHE"):
                settings.cache_path = Path(cache_path)

            if order := os.getenv("FORMALE_ORDER"):
                settings.default_order = int(order)

            if workers := os.getenv("FORMALE_WORKERS"):
                settings.workers = int(workers)

            if cap := os.getenv("FORMALE_ASSOC_CAP"):
                settings.associativity_degree_cap = int(cap)
        except ValueError as e:
            raise ConfigurationError(f"Invalid environment setting: {str(e)}") from e

        settings.validate()
        return settings


# Global settings instance
_settings: Optional[AppSettings] = None


def get_config() -> AppSettings:
    """Get the global settings instance."""
    global _settings
    if _settings is None:
        _settings = AppSettings.from_env()
    return _settings


def reset_config() -> None:
    """Forget the global instance so the next get_config() rereads the environment."""
    global _settings
    _settings = None
