"""Configuration management using Pydantic."""

from typing import Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from precy_bench.utils.validators import validate_report_format


class Config(BaseSettings):
    """
    Application configuration with environment variable support.

    Settings can be overridden via environment variables with the prefix
    PRECY_BENCH_ (e.g., PRECY_BENCH_REPORT_FORMAT=json). Numeric knobs of
    the checks are command-line flags only.
    """

    # ========== Report Settings ==========
    report_format: str = Field(
        default="text", description="Default report format (text, json)"
    )

    # ========== Advanced Settings ==========
    log_level: str = Field(
        default="WARNING", description="Logging level (DEBUG, INFO, WARNING, ERROR)"
    )

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="PRECY_BENCH_",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("report_format")
    def validate_format(cls, v: str) -> str:
        """Validate report format."""
        return validate_report_format(v)

    @field_validator("log_level")
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        valid_levels: list[str] = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        v_upper: str = v.upper()
        if v_upper not in valid_levels:
            raise ValueError(f"Invalid log level: {v}. Must be one of {valid_levels}")
        return v_upper

    def to_dict(self) -> dict[str, Any]:
        """Convert configuration to dictionary."""
        return self.model_dump()

    def __repr__(self) -> str:
        return (
            f"Config(\n"
            f"  report_format='{self.report_format}',\n"
            f"  log_level='{self.log_level}'\n"
            f")"
        )
