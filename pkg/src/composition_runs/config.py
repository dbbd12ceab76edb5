import logging
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Mapping, Optional

import yaml

from composition_runs.errors import ConfigError

logger = logging.getLogger(__name__)

ENV_PREFIX = "COMPOSITION_RUNS_"

# env var suffix -> settings field
ENV_FIELDS = {
    "PRECISION": "precision",
    "ENUM_CAP": "enumeration_cap",
    "SERIES_CAP": "series_cap",
}


@dataclass(frozen=True)
class Settings:
    """
    Knobs shared by every computation.

    Defaults < environment < YAML config file < command-line flags.
    """

    precision: int = 50  # decimal digits for mpmath work
    enumeration_cap: int = 24
    series_cap: int = 4096
    fourier_terms: int = 16
    tolerance: float = 1e-30
    workers: int = 1
    block_size: int = 64

    def __post_init__(self):
        if self.precision < 10:
            raise ConfigError(f"precision must be >= 10 digits (got {self.precision})")
        if self.enumeration_cap < 1:
            raise ConfigError(f"enumeration_cap must be positive (got {self.enumeration_cap})")
        if self.series_cap < 1:
            raise ConfigError(f"series_cap must be positive (got {self.series_cap})")
        if self.fourier_terms < 1:
            raise ConfigError(f"fourier_terms must be positive (got {self.fourier_terms})")
        if not 0 < self.tolerance < 1:
            raise ConfigError(f"tolerance must lie in (0, 1) (got {self.tolerance})")
        if self.workers < 1 or self.block_size < 1:
            raise ConfigError("workers and block_size must be positive")

    def updated(self, overrides: Mapping[str, Any]) -> "Settings":
        """Return a copy with the non-None entries of ``overrides`` applied."""
        known = {f.name: f.type for f in fields(self)}
        changes = {}
        for key, value in overrides.items():
            key = key.replace("-", "_")
            if value is None or key not in known:
                continue
            changes[key] = _coerce(key, value, getattr(self, key))
        return replace(self, **changes) if changes else self


def _coerce(key: str, value: Any, current: Any) -> Any:
    try:
        return type(current)(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"setting {key!r} expects {type(current).__name__}, got {value!r}") from exc


def settings_from_env(environ: Optional[Mapping[str, str]] = None) -> Settings:
    environ = os.environ if environ is None else environ
    overrides = {}
    for suffix, name in ENV_FIELDS.items():
        raw = environ.get(ENV_PREFIX + suffix)
        if raw is not None and raw != "":
            overrides[name] = raw
    if overrides:
        logger.debug("settings from environment: %s", overrides)
    return Settings().updated(overrides)


def read_config_file(path: str | Path) -> dict:
    """
    Load a YAML experiment manifest. Keys mirror the long flag names,
    e.g. ``precision: 60`` or ``series-cap: 2048``.
    """
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    with path.open("r", encoding="utf-8") as fh:
        data = yaml.safe_load(fh) or {}
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a mapping at top level")
    return {str(k).replace("-", "_"): v for k, v in data.items()}


def load_settings(
    config_path: Optional[str | Path] = None,
    flags: Optional[Mapping[str, Any]] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> Settings:
    settings = settings_from_env(environ)
    if config_path is not None:
        settings = settings.updated(read_config_file(config_path))
    if flags:
        settings = settings.updated(flags)
    return settings
