"""Configuration schema using Pydantic."""

from typing import Literal

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class LimitsConfig(BaseModel):
    """Resource caps for the factorial-size computations."""

    max_free_dim: int = 30240  # Largest Free(n) dimension we agree to enumerate
    max_rows: int = 5_000_000  # Candidate consequence rows per degree
    brute_force_max_free_dim: int = 10_000  # Guard for the one-box oracle
    warn_di_degree: int = 5  # Warn from this degree on for doubled signatures


class OutputConfig(BaseModel):
    """Report output configuration."""

    format: Literal["table", "json", "csv"] = "table"
    root_digits: int = 6  # Decimal digits of n-th root enclosures


class ZooConfig(BaseModel):
    """Example zoo configuration."""

    extra_dirs: list[str] = Field(default_factory=list)  # Searched before the shipped zoo


class DefaultsConfig(BaseModel):
    """Defaults for constructions with a size parameter."""

    divided_power_degree: int = 8  # Truncation N of x k[x]
    p0_degree: int = 3  # Truncation N of the polynomial Perm algebra


class Config(BaseSettings):
    """Root configuration for dicodim."""

    model_config = SettingsConfigDict(env_prefix="DICODIM_", env_nested_delimiter="__")

    limits: LimitsConfig = Field(default_factory=LimitsConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    zoo: ZooConfig = Field(default_factory=ZooConfig)
    defaults: DefaultsConfig = Field(default_factory=DefaultsConfig)
