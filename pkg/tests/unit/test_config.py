"""Unit tests for configuration."""

import logging

import pytest

from precy_bench.core.config import Config
from precy_bench.core.logging import setup_logging


class TestConfig:
    """Tests for Config class."""

    def test_default_config(self, test_config) -> None:
        """Test default configuration values."""
        assert test_config.report_format == "text"
        assert test_config.log_level == "WARNING"

    def test_custom_config(self) -> None:
        """Test custom configuration."""
        config: Config = Config(report_format="JSON", log_level="debug")

        assert config.report_format == "json"
        assert config.log_level == "DEBUG"

    def test_env_variable_override(self, monkeypatch) -> None:
        """Test environment variable override."""
        monkeypatch.setenv("PRECY_BENCH_REPORT_FORMAT", "json")

        config: Config = Config()

        assert config.report_format == "json"

    def test_config_validation(self) -> None:
        """Test configuration validation."""
        # Invalid report format
        with pytest.raises(ValueError):
            Config(report_format="yaml")

        # Invalid log level
        with pytest.raises(ValueError):
            Config(log_level="INVALID")

    def test_to_dict(self, test_config) -> None:
        """Test dictionary export."""
        assert test_config.to_dict() == {
            "report_format": "text",
            "log_level": "WARNING",
        }
        assert "report_format='text'" in repr(test_config)


class TestLogging:
    """Tests for setup_logging."""

    def test_single_handler(self) -> None:
        """Test repeated setup only changes the level."""
        logger = setup_logging("info")
        count = len(logger.handlers)

        again = setup_logging("DEBUG")

        assert again is logger
        assert len(again.handlers) == count
        assert again.level == logging.DEBUG
        setup_logging("WARNING")
