"""Configuration management module."""

import copy
from pathlib import Path
from typing import Any, Dict, Optional
import yaml

from src.utils.logger import get_logger

logger = get_logger()


class ConfigManager:
    """Manages toolkit configuration with YAML support."""

    DEFAULT_CONFIG = {
        "log_level": "INFO",
        "log_file": False,
        "verification": {
            "tensor_route_term_cap": 10_000_000
        },
        "solver": {
            "trials": 100,
            "seed": 7
        },
        "fuzz": {
            "trials": 500,
            "seed": 11,
            "max_entries": 3,
            "max_numerator": 3
        },
        "display": {
            "width": 100
        }
    }

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize configuration manager.

        Args:
            config_path: Path to config file. Defaults to config/config.yaml
        """
        if config_path:
            self.config_path = Path(config_path)
        else:
            self.config_path = Path(__file__).parent.parent.parent / "config" / "config.yaml"

        self._config: Dict[str, Any] = {}
        self._load_config()

    def _load_config(self) -> None:
        """Load configuration from YAML file."""
        loaded: Dict[str, Any] = {}
        if self.config_path.exists():
            try:
                with open(self.config_path, 'r') as f:
                    loaded = yaml.safe_load(f) or {}
                logger.debug(f"Configuration loaded from {self.config_path}")
            except yaml.YAMLError as e:
                logger.error(f"Error loading config: {e}")
                loaded = {}
            if not isinstance(loaded, dict):
                logger.error(f"Config root in {self.config_path} is not a mapping; using defaults")
                loaded = {}
        else:
            logger.debug(f"Config file not found at {self.config_path}; using defaults")

        self._config = self._deep_merge(copy.deepcopy(self.DEFAULT_CONFIG), loaded)

    def _deep_merge(self, base: Dict, override: Dict) -> Dict:
        """Deep merge two dictionaries."""
        result = base.copy()
        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._deep_merge(result[key], value)
            else:
                result[key] = value
        return result

    def config_exists(self) -> bool:
        """Check if configuration file exists."""
        return self.config_path.exists()

    def save(self) -> None:
        """Save current configuration to YAML file."""
        self.config_path.parent.mkdir(parents=True, exist_ok=True)

        with open(self.config_path, 'w') as f:
            yaml.dump(self._config, f, default_flow_style=False, sort_keys=False)

        logger.info(f"Configuration saved to {self.config_path}")

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value using dot notation.

        Args:
            key: Configuration key (e.g., "solver.trials")
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        value = self._config
        for k in key.split('.'):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        """
        Set a configuration value using dot notation.

        Args:
            key: Configuration key (e.g., "fuzz.seed")
            value: Value to set
        """
        keys = key.split('.')
        config = self._config

        for k in keys[:-1]:
            if not isinstance(config.get(k), dict):
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def _int(self, key: str) -> int:
        value = self.get(key)
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"Config key '{key}' must be an integer, got {value!r}")
        return value

    @property
    def log_level(self) -> str:
        return str(self.get("log_level", "INFO")).upper()

    @property
    def log_file(self) -> bool:
        return bool(self.get("log_file", False))

    @property
    def tensor_route_term_cap(self) -> int:
        """Largest tensor-route expansion (m^(2n-1) terms) attempted by the CLI."""
        return self._int("verification.tensor_route_term_cap")

    @property
    def solver_config(self) -> Dict[str, int]:
        return {"trials": self._int("solver.trials"), "seed": self._int("solver.seed")}

    @property
    def fuzz_config(self) -> Dict[str, int]:
        return {
            "trials": self._int("fuzz.trials"),
            "seed": self._int("fuzz.seed"),
            "max_entries": self._int("fuzz.max_entries"),
            "max_numerator": self._int("fuzz.max_numerator"),
        }

    @property
    def display_width(self) -> int:
        return self._int("display.width")
