"""
Lahseries Configuration Settings
================================
Central configuration for tables, verification suites and the CLI.
"""

import os
from dataclasses import dataclass
from typing import Tuple
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() == "true"


@dataclass
class SystemConfig:
    """System-wide configuration"""

    debug: bool = False
    log_level: str = "WARNING"

    # Reproducibility
    rng_seed: int = 1729
    max_n: int = 8
    trials: int = 25
    output_format: str = "text"  # "text" | "json"

    # Symbolic identity checks get expensive quickly; numeric checks take over above this
    symbolic_max_n: int = 8
    numeric_max_n: int = 12

    # Suite execution
    parallel_execution: bool = True
    max_workers: int = 4

    fixtures_dir: str = FIXTURES_DIR

    @classmethod
    def from_env(cls) -> 'SystemConfig':
        """Load configuration from environment variables"""
        return cls(
            debug=_env_bool("LAHSERIES_DEBUG", "false"),
            log_level=os.getenv("LAHSERIES_LOG_LEVEL", "WARNING").upper(),
            rng_seed=int(os.getenv("LAHSERIES_RNG_SEED", "1729")),
            max_n=int(os.getenv("LAHSERIES_MAX_N", "8")),
            trials=int(os.getenv("LAHSERIES_TRIALS", "25")),
            output_format=os.getenv("LAHSERIES_FORMAT", "text").lower(),
            symbolic_max_n=int(os.getenv("LAHSERIES_SYMBOLIC_MAX_N", "8")),
            numeric_max_n=int(os.getenv("LAHSERIES_NUMERIC_MAX_N", "12")),
            parallel_execution=_env_bool("LAHSERIES_PARALLEL", "true"),
            max_workers=int(os.getenv("LAHSERIES_MAX_WORKERS", "4")),
            fixtures_dir=os.getenv("LAHSERIES_FIXTURES_DIR", FIXTURES_DIR),
        )

    def validate(self) -> None:
        """Validate configuration ranges"""
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"Unknown output format: {self.output_format}")
        if self.symbolic_max_n < 1 or self.numeric_max_n < 1:
            raise ValueError("symbolic_max_n and numeric_max_n must be at least 1")
        if self.max_workers < 1:
            raise ValueError("max_workers must be at least 1")


@dataclass(frozen=True)
class SamplingPolicy:
    """Ranges for randomly drawn rationals in the verification suites"""

    numerator_range: Tuple[int, int] = (-9, 9)
    denominator_range: Tuple[int, int] = (1, 4)


# Load configuration
config = SystemConfig.from_env()
policy = SamplingPolicy()
