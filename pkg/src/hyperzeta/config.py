"""Configuration helpers for the hyperzeta toolkit."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


class ConfigError(ValueError):
    """Raised when an environment setting cannot be parsed."""


def _getenv(key: str, default: Optional[str] = None) -> Optional[str]:
    """Fetch environment variables while trimming whitespace."""
    value = os.getenv(key, default)
    if value is None:
        return None
    return value.strip() or default


def _int_setting(key: str, default: int, minimum: int) -> int:
    raw = _getenv(key, str(default)) or str(default)
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{key} must be an integer, got {raw!r}") from exc
    if value < minimum:
        raise ConfigError(f"{key} must be at least {minimum}, got {value}")
    return value


def _fraction_setting(key: str, default: str) -> Fraction:
    raw = _getenv(key, default) or default
    try:
        value = Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"{key} must be a decimal or rational number, got {raw!r}") from exc
    if value < 0:
        raise ConfigError(f"{key} must be non-negative, got {raw!r}")
    return value


@dataclass
class ComputeSettings:
    threads: int = 1
    orientation_seeds: int = 10
    max_enumerated_walks: int = 2_000_000
    ramanujan_tolerance: Fraction = Fraction(1, 10**9)


@dataclass
class Settings:
    compute: ComputeSettings
    log_level: str = "WARNING"
    environment: str = "development"


def load_settings() -> Settings:
    """Construct a Settings object from environment variables."""
    # Lazy import so running without python-dotenv remains possible.
    try:
        from dotenv import load_dotenv

        load_dotenv()
    except ModuleNotFoundError:
        pass

    compute = ComputeSettings(
        threads=_int_setting("HYPERZETA_THREADS", 1, minimum=1),
        orientation_seeds=_int_setting("HYPERZETA_ORIENTATION_SEEDS", 10, minimum=0),
        max_enumerated_walks=_int_setting("HYPERZETA_MAX_WALKS", 2_000_000, minimum=1),
        ramanujan_tolerance=_fraction_setting("HYPERZETA_RAMANUJAN_TOLERANCE", "1e-9"),
    )

    log_level = (_getenv("HYPERZETA_LOG_LEVEL", "WARNING") or "WARNING").upper()
    if log_level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
        raise ConfigError(f"HYPERZETA_LOG_LEVEL is not a logging level: {log_level!r}")

    return Settings(
        compute=compute,
        log_level=log_level,
        environment=_getenv("HYPERZETA_ENV", "development") or "development",
    )


__all__ = [
    "ComputeSettings",
    "ConfigError",
    "Settings",
    "load_settings",
]
