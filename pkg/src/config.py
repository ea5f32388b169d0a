"""Configuration management"""

import logging
import os

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)


class Config:
    """Application configuration"""

    # Reproducibility
    DEFAULT_SEED: int = int(os.getenv("DSO_DEFAULT_SEED", "20190601"))

    # Logging
    LOG_LEVEL: str = os.getenv("DSO_LOG_LEVEL", "WARNING")

    # Benchmark harness
    BENCH_WORKERS: int = int(os.getenv("DSO_BENCH_WORKERS", "1"))

    # ACO baseline defaults
    ACO_ANTS: int = int(os.getenv("DSO_ACO_ANTS", "3"))
    ACO_ITERATIONS: int = int(os.getenv("DSO_ACO_ITERATIONS", "100"))
    ACO_RHO: float = float(os.getenv("DSO_ACO_RHO", "0.5"))

    # Langfuse settings
    TRACING: str = os.getenv("DSO_TRACING", "auto").lower()
    LANGFUSE_PUBLIC_KEY: str = os.getenv("LANGFUSE_PUBLIC_KEY", "")
    LANGFUSE_SECRET_KEY: str = os.getenv("LANGFUSE_SECRET_KEY", "")
    LANGFUSE_HOST: str = os.getenv("LANGFUSE_HOST", "https://cloud.langfuse.com")

    @classmethod
    def has_langfuse_credentials(cls) -> bool:
        return bool(cls.LANGFUSE_PUBLIC_KEY and cls.LANGFUSE_SECRET_KEY)

    @classmethod
    def tracing_enabled(cls) -> bool:
        """Tracing runs only when not switched off and credentials exist"""
        if cls.TRACING in ("off", "0", "false", "no"):
            return False
        return cls.has_langfuse_credentials()

    @classmethod
    def validate(cls) -> bool:
        """Validate tracing configuration"""
        if cls.TRACING in ("on", "1", "true", "yes") and not cls.has_langfuse_credentials():
            logger.warning("DSO_TRACING is on but Langfuse credentials are not configured")
            return False

        return cls.tracing_enabled()


config = Config()
