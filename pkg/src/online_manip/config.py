import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

import jsonschema
import yaml

logger = logging.getLogger(__name__)

CONFIG_ENV = "ONLINE_MANIP_CONFIG"
NODE_BUDGET_ENV = "ONLINE_MANIP_NODE_BUDGET"

SETTINGS_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "node_budget": {"type": "integer", "minimum": 1},
        "crosscheck_samples": {"type": "integer", "minimum": 1},
        "crosscheck_seed": {"type": "integer"},
        "workers": {"type": "integer", "minimum": 1},
        "max_brute_items": {"type": "integer", "minimum": 1},
    },
    "additionalProperties": False,
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Settings:
    node_budget: int = 10_000_000
    crosscheck_samples: int = 5000
    crosscheck_seed: int = 0
    workers: int = 1
    max_brute_items: int = 24


def load_settings(path: Optional[str] = None) -> Settings:
    """
    Builds Settings from an optional YAML file (argument, else $ONLINE_MANIP_CONFIG)
    and applies the $ONLINE_MANIP_NODE_BUDGET override.
    """
    settings = Settings()
    path = path or os.getenv(CONFIG_ENV)
    if path:
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"Cannot read config file {path}: {e}") from e
        try:
            jsonschema.validate(data, SETTINGS_SCHEMA)
        except jsonschema.ValidationError as e:
            raise ConfigError(f"Invalid config file {path}: {e.message}") from e
        known = {f.name for f in fields(Settings)}
        settings = replace(settings, **{k: v for k, v in data.items() if k in known})
        logger.debug(f"Loaded settings from {path}")

    override = os.getenv(NODE_BUDGET_ENV)
    if override:
        try:
            budget = int(override)
        except ValueError as e:
            raise ConfigError(f"{NODE_BUDGET_ENV} must be an integer, got {override!r}") from e
        if budget < 1:
            raise ConfigError(f"{NODE_BUDGET_ENV} must be positive, got {budget}")
        settings = replace(settings, node_budget=budget)
    return settings


_active: Optional[Settings] = None


def get_settings() -> Settings:
    global _active
    if _active is None:
        _active = load_settings()
    return _active


def set_settings(settings: Optional[Settings]) -> None:
    """Installs process-wide settings; None makes the next get_settings() reload."""
    global _active
    _active = settings
