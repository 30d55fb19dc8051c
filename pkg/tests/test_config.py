from __future__ import annotations

from fractions import Fraction

import pytest

from hyperzeta.config import ConfigError, load_settings

VARIABLES = (
    "HYPERZETA_THREADS",
    "HYPERZETA_ORIENTATION_SEEDS",
    "HYPERZETA_MAX_WALKS",
    "HYPERZETA_RAMANUJAN_TOLERANCE",
    "HYPERZETA_LOG_LEVEL",
    "HYPERZETA_ENV",
)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in VARIABLES:
        monkeypatch.delenv(name, raising=False)


def test_defaults() -> None:
    settings = load_settings()
    assert settings.compute.threads == 1
    assert settings.compute.orientation_seeds == 10
    assert settings.compute.max_enumerated_walks == 2_000_000
    assert settings.compute.ramanujan_tolerance == Fraction(1, 10**9)
    assert settings.log_level == "WARNING"
    assert settings.environment == "development"


def test_overrides(monkeypatch) -> None:
    monkeypatch.setenv("HYPERZETA_THREADS", " 4 ")
    monkeypatch.setenv("HYPERZETA_RAMANUJAN_TOLERANCE", "1/1000")
    monkeypatch.setenv("HYPERZETA_LOG_LEVEL", "info")
    monkeypatch.setenv("HYPERZETA_ORIENTATION_SEEDS", "0")
    settings = load_settings()
    assert settings.compute.threads == 4
    assert settings.compute.ramanujan_tolerance == Fraction(1, 1000)
    assert settings.compute.orientation_seeds == 0
    assert settings.log_level == "INFO"


def test_blank_values_fall_back(monkeypatch) -> None:
    monkeypatch.setenv("HYPERZETA_THREADS", "   ")
    assert load_settings().compute.threads == 1


@pytest.mark.parametrize(
    "name, value",
    [
        ("HYPERZETA_THREADS", "many"),
        ("HYPERZETA_THREADS", "0"),
        ("HYPERZETA_MAX_WALKS", "-1"),
        ("HYPERZETA_RAMANUJAN_TOLERANCE", "tiny"),
        ("HYPERZETA_RAMANUJAN_TOLERANCE", "-0.5"),
        ("HYPERZETA_LOG_LEVEL", "chatty"),
    ],
)
def test_malformed_values(monkeypatch, name: str, value: str) -> None:
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        load_settings()
