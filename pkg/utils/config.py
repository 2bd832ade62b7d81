"""
Centralized configuration management with strict validation
"""

from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from utils.exceptions import ConfigurationError


class Config(BaseSettings):
    """Application configuration with validation"""

    model_config = SettingsConfigDict(
        env_prefix="PERMSTATS_",
        env_file=".env",
        case_sensitive=False,
        validate_assignment=True,
        extra="ignore",
    )

    # Application
    environment: str = Field("development")
    log_level: str = Field("INFO")
    log_format: str = Field("json")

    # Enumeration caps (degree of the ambient symmetric group)
    exhaustive_degree_cap: int = Field(8, ge=1, le=10)
    slow_degree_cap: int = Field(9, ge=1, le=10)
    avoider_degree_cap: int = Field(9, ge=1, le=10)

    # Harness fan-out
    workers: int = Field(1, ge=1, le=64)
    report_dir: Optional[Path] = Field(None)

    @field_validator("environment")
    @classmethod
    def validate_environment(cls, v: str) -> str:
        if v not in ("development", "test", "production"):
            raise ValueError("ENVIRONMENT must be one of: development, test, production")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"LOG_LEVEL {v!r} is not a logging level")
        return level

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        if v not in ("json", "console"):
            raise ValueError("LOG_FORMAT must be 'json' or 'console'")
        return v

    @model_validator(mode="after")
    def validate_caps(self) -> "Config":
        if self.exhaustive_degree_cap > self.slow_degree_cap:
            raise ValueError("EXHAUSTIVE_DEGREE_CAP must not exceed SLOW_DEGREE_CAP")
        return self

    def resolve_degree_cap(self, slow: bool = False) -> int:
        """Largest degree an exhaustive run may enumerate"""
        return self.slow_degree_cap if slow else self.exhaustive_degree_cap


@lru_cache()
def get_config() -> Config:
    """Get cached configuration instance"""
    try:
        return Config()
    except Exception as e:
        raise ConfigurationError(
            f"Configuration validation failed: {str(e)}", {"exception_type": type(e).__name__}
        )
