# app/config.py

import os
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator

# Load environment variables
load_dotenv()

CachePolicy = Literal["per-call", "shared"]

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

_TRUTHY = {"1", "true", "yes", "on"}


def _known_level(value: str) -> str:
    value = value.upper()
    if value not in LOG_LEVELS:
        raise ValueError(f"unknown log level {value!r}")
    return value


class Settings(BaseModel):
    """Defaults for the command line, read from the environment."""

    threads: int = Field(default=1, ge=1)
    cache: CachePolicy = "per-call"
    log_level: str = "WARNING"
    json_output: bool = False

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        return _known_level(value)


class CliConfig(BaseModel):
    """Validated flags of one CLI invocation."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: str
    json_output: bool = False
    oracle: bool = False
    threads: int = Field(default=1, ge=1, le=64)
    cache: CachePolicy = "per-call"
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        return _known_level(value)


def get_settings() -> Settings:
    """Read Settings from STABLECHAR_* variables (no caching, the environment may change)."""
    return Settings(
        threads=os.getenv("STABLECHAR_THREADS", "1"),
        cache=os.getenv("STABLECHAR_CACHE", "per-call"),
        log_level=os.getenv("STABLECHAR_LOG_LEVEL", "WARNING"),
        json_output=os.getenv("STABLECHAR_JSON", "").strip().lower() in _TRUTHY,
    )
