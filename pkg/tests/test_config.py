import warnings

import pytest
from pydantic import ValidationError

from src.utils.config import Settings, format_real


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("MAGLAP_COST_CAP", "1_000_000")
    monkeypatch.setenv("MAGLAP_MAX_WORKERS", "3")
    monkeypatch.setenv("MAGLAP_LOG_LEVEL", "debug")
    monkeypatch.setenv("MAGLAP_UNRELATED", "ignored")
    s = Settings(_env_file=None)
    assert s.cost_cap == 1e6
    assert s.max_workers == 3
    assert s.log_level == "DEBUG"


def test_settings_build_without_deprecation_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter("error", DeprecationWarning)
        Settings(_env_file=None)


def test_invalid_worker_count(monkeypatch):
    monkeypatch.setenv("MAGLAP_MAX_WORKERS", "0")
    with pytest.raises(ValidationError):
        Settings(_env_file=None)


def test_format_real():
    assert format_real(1 / 3) == "0.333333333333"
    assert format_real(-0.0) == "0"
