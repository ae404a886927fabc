import json
import os
from typing import Any, Dict

from .console import warn
from .paths import ensure_data_dir, get_data_path

SETTINGS_FILE = get_data_path("user_settings.json")

# Built-in defaults, overridden by the settings file, the environment and CLI flags (in that order)
DEFAULTS: Dict[str, Any] = {
    "tolerance": 1e-8,
    "format": "json",
    "workers": 1,
}


class UserConfig:
    @staticmethod
    def load() -> Dict[str, Any]:
        if not os.path.exists(SETTINGS_FILE):
            return {}
        try:
            with open(SETTINGS_FILE, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            warn(f"Error loading settings from {SETTINGS_FILE}: {e}")
            return {}
        if not isinstance(data, dict):
            warn(f"Ignoring settings file {SETTINGS_FILE}: top level is not an object")
            return {}
        return data

    @staticmethod
    def save(key: str, value: Any) -> None:
        if key not in DEFAULTS:
            raise KeyError(f"Unknown setting '{key}' (known: {', '.join(sorted(DEFAULTS))})")
        settings = UserConfig.load()
        settings[key] = value
        if not ensure_data_dir():
            return
        try:
            with open(SETTINGS_FILE, "w", encoding="utf-8") as f:
                json.dump(settings, f, indent=2)
        except OSError as e:
            warn(f"Error saving settings: {e}")

    @staticmethod
    def get(key: str, default: Any = None) -> Any:
        settings = UserConfig.load()
        if default is None:
            default = DEFAULTS.get(key)
        return settings.get(key, default)
