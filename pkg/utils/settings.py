"""
Configuración del framework desde variables de entorno (.env).

Se lee una única vez con python-dotenv y se valida con pydantic. Los
parámetros propios de un análisis concreto (presupuesto, límites) viven en
AnalysisBudget; aquí sólo están los valores por defecto globales.
"""
import os
from functools import lru_cache
from typing import Optional

from dotenv import find_dotenv, load_dotenv
from pydantic import BaseModel, Field, field_validator


class Settings(BaseModel):
    """
    Global defaults.

    Attributes:
        oracle_limit: Max order accepted by the brute-force oracle.
        workers: Parallel workers for sweeps and classification (None = CPU count).
        timezone: Timezone of log timestamps.
        results_dir: Directory for JSON-lines and CSV outputs.
        distinct_limit: Max order for canonical "distinct found" dedup.
        verbose: Whether progress logs are written to stderr.
    """
    oracle_limit: int = Field(default=12, ge=1, le=24)
    workers: Optional[int] = Field(default=None, ge=1)
    timezone: str = "UTC"
    results_dir: str = "results"
    distinct_limit: int = Field(default=10, ge=1, le=10)
    verbose: bool = True

    @field_validator("workers", mode="before")
    @classmethod
    def _blank_workers(cls, value):
        if value in ("", None):
            return None
        return value


def _env_bool(raw: Optional[str], default: bool) -> bool:
    if raw is None or raw == "":
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Loads .env (if any) and returns the validated settings."""
    load_dotenv(find_dotenv(usecwd=True))
    return Settings(
        oracle_limit=int(os.getenv("ANTIDIM_ORACLE_LIMIT", 12)),
        workers=os.getenv("ANTIDIM_WORKERS"),
        timezone=os.getenv("ANTIDIM_TIMEZONE", "UTC"),
        results_dir=os.getenv("ANTIDIM_RESULTS_DIR", "results"),
        distinct_limit=int(os.getenv("ANTIDIM_DISTINCT_LIMIT", 10)),
        verbose=_env_bool(os.getenv("ANTIDIM_VERBOSE"), True),
    )


def default_workers() -> int:
    configured = get_settings().workers
    return configured or os.cpu_count() or 1
