"""
Application settings and configuration.
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from QGAIN_* environment variables or a .env file."""

    model_config = SettingsConfigDict(
        env_prefix="QGAIN_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "qgain"
    app_version: str = "1.0.0"

    # Numerics
    tolerance: float = Field(default=1e-9, gt=0)
    oracle_rel_tolerance: float = Field(default=1e-6, gt=0)
    renormalize_tolerance: float = Field(default=1e-6, ge=0)

    # Enumeration limits
    size_cap: int = Field(default=10, ge=1)
    reduction_budget: int = Field(default=1_000_000, ge=1)
    cycle_budget: int = Field(default=100_000, ge=1)

    # Every determinant of a Hermitian matrix is computed 2n ways and compared,
    # and both Laplacian routes are built and compared.
    verification_mode: bool = False

    # Output
    output_decimals: int = Field(default=12, ge=1, le=17)

    # Logging
    log_level: str = "INFO"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get the application settings instance (cached; call cache_clear() to reload)."""
    return Settings()
