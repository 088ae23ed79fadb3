import os
from os.path import join
from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache
from qsymkit.config import DEFAULT_DEGREE_BOUND, DEFAULT_SIZE_CAP

root_dir = os.path.dirname(os.path.abspath(__file__))


class Settings(BaseSettings):
    threads: int | None = None  # falls back to the CPU count
    degree_bound: int = DEFAULT_DEGREE_BOUND
    size_cap: int = DEFAULT_SIZE_CAP
    show_progress: bool = False
    bugsnag_api_key: str | None = None
    env: str | None = None

    model_config = SettingsConfigDict(
        env_prefix="QSYMKIT_", env_file=join(root_dir, ".env"), extra="ignore"
    )

    @property
    def worker_count(self) -> int:
        if self.threads is not None and self.threads > 0:
            return self.threads

        return os.cpu_count() or 1


@lru_cache
def get_settings():
    return Settings()


settings = get_settings()
