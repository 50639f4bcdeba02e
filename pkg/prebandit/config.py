"""Runtime configuration using Pydantic Settings."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime settings loaded from PREBANDIT_* environment variables."""

    # Parallelism for run_batch (1 = run replicates inline)
    threads: int = 1

    # Subset optimization
    brute_force_budget: int = 1_000_000  # max C(n, l) enumerated exhaustively

    # Output
    csv_float_digits: int = 17

    # Logging Configuration
    log_level: str = "INFO"
    json_logs: bool = False

    model_config = SettingsConfigDict(
        env_prefix="PREBANDIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    @property
    def worker_count(self) -> int:
        """Worker count clamped to at least one."""
        return max(1, self.threads)


# Global settings instance
settings = Settings()
