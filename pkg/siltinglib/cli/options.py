"""Settings for the command line, read from ``SILTING_*`` environment variables."""

import os
from pathlib import Path
from typing import Literal, Optional

from pydantic import validator
from pydantic_settings import BaseSettings

from siltinglib.epis import DEFAULT_TOWER_STEPS
from siltinglib.exactalg import FieldSpec
from siltinglib.quiveralg import DEFAULT_MAX_PATH_LENGTH
from siltinglib.tautilt import DEFAULT_MAX_DIM, DEFAULT_MAX_NODES


class SiltingOptions(BaseSettings):
    """
    Defaults for every subcommand. Command line flags override these, and caps
    written into an algebra file override the environment.
    """

    field: str = "Q"
    max_nodes: int = DEFAULT_MAX_NODES
    max_dim: int = DEFAULT_MAX_DIM
    depth_cap: int = DEFAULT_TOWER_STEPS
    max_path_length: int = DEFAULT_MAX_PATH_LENGTH
    seed: int = 0
    cache_dir: Optional[Path] = None
    workers: int = 1
    format: Literal["text", "json", "csv", "dot"] = "text"
    dim_cap: int = 4

    class Config:
        env_prefix = "SILTING_"

    @validator("field", pre=True, always=True)
    def validate_field(cls, v):
        # rejects anything FieldSpec.parse does not understand
        return str(FieldSpec.parse(v if v is not None else "Q"))

    @validator("max_nodes", "max_dim", "depth_cap", "max_path_length", "workers", "dim_cap")
    def validate_positive(cls, v):
        if v < 1:
            raise ValueError(f"expected a positive integer, got {v}")
        return v

    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.field)


class SentryOptions(BaseSettings):
    """
    Defines the parameters for configuring Sentry error reporting.
    """

    dsn: Optional[str] = None
    release: Optional[str] = None
    environment: Optional[str] = None
    sample_rate: Optional[float] = 1.0
    redact_params: Optional[bool] = False

    class Config:
        env_prefix = "SILTING_SENTRY_"

    @validator("sample_rate", pre=True, always=True)
    def validate_sample_rate(cls, v):
        return float(v) if v is not None else None

    @validator("redact_params", pre=True, always=True)
    def validate_redact_params(cls, v):
        return v if v is not None else (os.getenv("SILTING_SENTRY_REDACT_PARAMS", "").lower() == "true")
