from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache
from dotenv import load_dotenv

load_dotenv()

MAX_ENUMERATION_BUDGET = 2**62


class Settings(BaseSettings):
    """Application configuration"""

    # Enumeration
    enumeration_budget: int = 2**28
    enumeration_block_cells: int = 2**24
    workers: int = 1

    # Graph generation
    generator_max_retries: int = 200
    regular_max_repair_rounds: int = 100
    ensemble_runs: int = 10

    # Output
    csv_significant_digits: int = 12
    output_dir: str = "./outputs"
    log_level: str = "INFO"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="DYADBOUND_",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("enumeration_budget")
    @classmethod
    def _cap_budget(cls, value: int) -> int:
        # ranks are held in int64 during unranking
        if value < 1:
            raise ValueError("enumeration_budget must be positive")
        return min(value, MAX_ENUMERATION_BUDGET)

    @field_validator("workers", "generator_max_retries", "ensemble_runs", "csv_significant_digits")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("value must be at least 1")
        return value


@lru_cache()
def get_settings():
    return Settings()
