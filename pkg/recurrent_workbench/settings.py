import enum
from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

PACKAGE_ROOT = Path(__file__).parent


class LogLevel(str, enum.Enum):  # noqa: WPS600
    """Possible log levels."""

    NOTSET = "NOTSET"
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    FATAL = "FATAL"


class Settings(BaseSettings):
    """
    Workbench settings.

    These parameters can be configured
    with environment variables.
    """

    # Current environment
    environment: str = "dev"

    log_level: LogLevel = LogLevel.INFO

    # Largest diagram area explored by the disc-diagram search
    max_area: int = 8
    # Default word-metric radius of Cayley balls
    ball_radius: int = 3
    # Cayley balls stop growing beyond this many elements
    element_cap: int = 20000
    # Segments followed by a billiard trace before it is reported open
    max_bounces: int = 64

    # Shipped complexes, diagrams, presentations and graphs
    fixtures_dir: Path = PACKAGE_ROOT / "fixtures"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="RECURRENT_WORKBENCH_",
        env_file_encoding="utf-8",
    )


settings = Settings()
