"""Tests for infrastructure configuration."""

from __future__ import annotations

import os
from unittest.mock import patch

import pytest

from coxaut.infrastructure.config import Settings, load_settings


class TestSettings:
    def test_dataclass_fields(self, settings: Settings) -> None:
        assert settings.closure_cap == 100_000
        assert settings.order_cutoff == 64
        assert settings.strict_parsing is False


class TestLoadSettings:
    def test_defaults(self) -> None:
        with patch.dict(os.environ, {}, clear=True):
            s = load_settings()
        assert s.log_format == "text"
        assert s.log_level == "WARNING"
        assert s.closure_cap == 100_000
        assert s.order_cutoff == 64
        assert s.spe_cutoff == 1000
        assert s.strict_parsing is False
        assert s.random_seed == 0
        assert s.sample_size == 1000

    def test_values_from_env(self) -> None:
        env = {
            "LOG_FORMAT": " JSON ",
            "LOG_LEVEL": "debug",
            "CLOSURE_CAP": "500",
            "ORDER_CUTOFF": "32",
            "SPE_CUTOFF": "64",
            "RANDOM_SEED": "9",
            "SAMPLE_SIZE": "10",
        }
        with patch.dict(os.environ, env, clear=True):
            s = load_settings()
        assert s.log_format == "json"
        assert s.log_level == "DEBUG"
        assert s.closure_cap == 500
        assert s.order_cutoff == 32
        assert s.spe_cutoff == 64
        assert s.random_seed == 9
        assert s.sample_size == 10

    @pytest.mark.parametrize("value", ["1", "true", "YES", "on"])
    def test_strict_parsing_truthy(self, value: str) -> None:
        with patch.dict(os.environ, {"STRICT_PARSING": value}, clear=True):
            assert load_settings().strict_parsing is True

    def test_strict_parsing_falsy(self) -> None:
        with patch.dict(os.environ, {"STRICT_PARSING": "no"}, clear=True):
            assert load_settings().strict_parsing is False

    def test_bad_integer(self) -> None:
        with patch.dict(os.environ, {"CLOSURE_CAP": "lots"}, clear=True):
            with pytest.raises(ValueError):
                load_settings()
