"""Configuration settings for the surface toolkit.

There is no configuration file. Defaults come from the environment (a ``.env``
file is honoured) and command-line flags override them.
"""

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field

# Load environment variables from .env file
load_dotenv()


def _env_float(name: str, default: float) -> float:
    return float(os.getenv(name, str(default)))


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(name, str(default)))


class ToleranceConfig(BaseModel):
    """Numerical tolerances used by the geometric checks."""

    placement: float = Field(
        default_factory=lambda: _env_float("SURFACE_PLACEMENT_TOL", 1e-9),
        description="Side/tick matching tolerance for placed triangles",
    )
    trace: float = Field(
        default_factory=lambda: _env_float("SURFACE_TRACE_TOL", 1e-9),
        description="Parabolicity tolerance on ||trace| - 2|",
    )
    degeneracy: float = Field(
        default_factory=lambda: _env_float("SURFACE_DEGENERACY_TOL", 1e-8),
        description="Minimal separation of placed ideal vertices",
    )
    quadrature: float = Field(
        default_factory=lambda: _env_float("SURFACE_QUADRATURE_TOL", 1e-6),
        description="Agreement required from quadrature oracles",
    )
    residual: float = Field(
        default_factory=lambda: _env_float("SURFACE_RESIDUAL_TOL", 1e-12),
        description="Maximal residual of a unique angle solution",
    )
    continuity: float = Field(
        default_factory=lambda: _env_float("SURFACE_CONTINUITY_TOL", 1e-8),
        description="C1 matching of profile pieces at breakpoints",
    )


class NumericsConfig(BaseModel):
    """Grid sizes and iteration limits for the metric numerics."""

    grid_size: int = Field(default_factory=lambda: _env_int("SURFACE_GRID_SIZE", 2000))
    fd_step: float = Field(default_factory=lambda: _env_float("SURFACE_FD_STEP", 1e-4))
    max_halvings: int = Field(default_factory=lambda: _env_int("SURFACE_MAX_HALVINGS", 40))
    scan_size: int = Field(default_factory=lambda: _env_int("SURFACE_SCAN_SIZE", 10_000))
    root_tol: float = Field(default_factory=lambda: _env_float("SURFACE_ROOT_TOL", 1e-12))


class GeneratorConfig(BaseModel):
    """Limits for the graph generators."""

    max_congruence_level: int = Field(
        default_factory=lambda: _env_int("SURFACE_MAX_CONGRUENCE_LEVEL", 13)
    )


class LogConfig(BaseModel):
    """Logging configuration settings."""

    level: str = Field(default_factory=lambda: os.getenv("SURFACE_LOG_LEVEL", "WARNING"))
    format: str = Field(default_factory=lambda: os.getenv("SURFACE_LOG_FORMAT", "console"))
    file: str | None = Field(default_factory=lambda: os.getenv("SURFACE_LOG_FILE"))


class Config(BaseModel):
    """Main configuration class."""

    tolerances: ToleranceConfig = Field(default_factory=ToleranceConfig)
    numerics: NumericsConfig = Field(default_factory=NumericsConfig)
    generators: GeneratorConfig = Field(default_factory=GeneratorConfig)
    logging: LogConfig = Field(default_factory=LogConfig)


@lru_cache(maxsize=1)
def get_config() -> Config:
    """Return the process-wide configuration, read once from the environment."""
    return Config()
