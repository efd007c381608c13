"""
KBlowup Engine - Configuration

All computation bounds loaded from environment variables via Pydantic.
"""
from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings from environment variables"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    # App Config
    APP_NAME: str = "KBlowup Engine"
    APP_VERSION: str = "0.1.0"
    ENVIRONMENT: str = "development"
    LOG_LEVEL: str = "INFO"
    LOG_JSON_FORMAT: bool = False

    # Filtration / truncation bounds
    DEGREE_BOUND: int = 12
    BICOMPLEX_TRUNCATION: int = 8
    CECH_WINDOW: int = 10
    STABILIZATION_RUNS: int = 3
    HILBERT_BOUND: int = 12
    TORSION_DEGREE_CAP: int = 16

    # Finite-dimensional algebras (bicomplex tensor powers)
    MAX_FD_DIMENSION: int = 4
    MAX_TENSOR_DEGREE: int = 8

    # Ideal operations
    SATURATION_MAX_ITERATIONS: int = 64

    # Randomized choices
    NZD_RETRIES: int = 8
    RANDOM_SEED: int = 0

    @property
    def is_production(self) -> bool:
        return self.ENVIRONMENT == "production"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


settings = get_settings()
