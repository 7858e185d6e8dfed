"""Library configuration loaded from environment variables."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Literal

from dotenv import load_dotenv
from pydantic_settings import BaseSettings

load_dotenv()

BASE_DIR = Path(__file__).resolve().parent
DATA_DIR = BASE_DIR / "data"
OUTPUT_DIR = BASE_DIR.parent / "reports"


class Settings(BaseSettings):
    """Central configuration – every value comes from .env or defaults."""

    # --- Enumeration guards ---
    degree_bound: int = 12
    max_alpha: int = 8
    max_columns: int = 8
    permutation_search_limit: int = 8

    # --- Numerics ---
    float_tolerance: float = 1e-9
    inequality_samples: int = 64
    random_seed: int = 20240601

    # --- Gröbner engine ---
    groebner_method: Literal["buchberger", "f5b"] = "buchberger"

    # --- Output ---
    log_level: str = "info"
    data_dir: str = str(DATA_DIR)
    output_dir: str = str(OUTPUT_DIR)

    class Config:
        env_prefix = "SYMQUOT_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"


@lru_cache()
def get_settings() -> Settings:
    """Return cached settings singleton."""
    return Settings()


def ensure_output_dir() -> Path:
    """Create the report directory if it does not exist and return its path."""
    path = Path(get_settings().output_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path
