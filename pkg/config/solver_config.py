"""
Solver configuration and environment loading.
"""

import os
import logging
from typing import List, Optional, Tuple

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

load_dotenv()

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def _env_int_list(name: str, default: str) -> List[int]:
    raw = os.getenv(name) or default
    try:
        values = [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"{name} must be a comma-separated list of integers, got {raw!r}")
    if not values:
        raise ValueError(f"{name} must name at least one size")
    return values


def _env_range(name: str, default: str) -> Tuple[float, float]:
    raw = os.getenv(name) or default
    parts = [part.strip() for part in raw.split(",")]
    try:
        low, high = (float(part) for part in parts)
    except ValueError:
        raise ValueError(f"{name} must be two comma-separated numbers, got {raw!r}")
    return low, high


class SolverConfig:
    """Runtime settings for the solver, oracle, generator and bench harness."""

    def __init__(self,
                 log_level: Optional[str] = None,
                 oracle_max_vertices: Optional[int] = None,
                 default_root: Optional[int] = None,
                 bench_sizes: Optional[List[int]] = None,
                 bench_repetitions: Optional[int] = None,
                 max_cycle_len: Optional[int] = None,
                 weight_range: Optional[Tuple[float, float]] = None):
        """
        Initialize solver configuration. Explicit arguments win over the environment.

        Args:
            log_level (str): Logging level name for entry points
            oracle_max_vertices (int): Largest vertex count the oracle enumerates
            default_root (int): DFS root used when the CLI gets no --root
            bench_sizes (List[int]): Target vertex counts for the scaling harness
            bench_repetitions (int): Cacti generated per bench size
            max_cycle_len (int): Longest cycle the generator attaches
            weight_range (Tuple[float, float]): Default generator weight range
        """
        self.log_level = (log_level or os.getenv("CACTUS_LOG_LEVEL") or "WARNING").upper()
        self.oracle_max_vertices = (oracle_max_vertices if oracle_max_vertices is not None
                                    else _env_int("CACTUS_ORACLE_MAX_VERTICES", 24))
        self.default_root = (default_root if default_root is not None
                             else _env_int("CACTUS_DEFAULT_ROOT", 0))
        self.bench_sizes = bench_sizes or _env_int_list("CACTUS_BENCH_SIZES", "1000,2000,4000")
        self.bench_repetitions = (bench_repetitions if bench_repetitions is not None
                                  else _env_int("CACTUS_BENCH_REPETITIONS", 5))
        self.max_cycle_len = (max_cycle_len if max_cycle_len is not None
                              else _env_int("CACTUS_MAX_CYCLE_LEN", 8))
        self.weight_range = weight_range or _env_range("CACTUS_WEIGHT_RANGE", "1,10")
        self._validate()

    def _validate(self):
        """Reject settings no command could run with."""
        if not isinstance(logging.getLevelName(self.log_level), int):
            raise ValueError(f"CACTUS_LOG_LEVEL is not a logging level: {self.log_level}")
        if self.oracle_max_vertices < 1:
            raise ValueError("CACTUS_ORACLE_MAX_VERTICES must be positive")
        if self.default_root < 0:
            raise ValueError("CACTUS_DEFAULT_ROOT must be nonnegative")
        if self.bench_repetitions < 1:
            raise ValueError("CACTUS_BENCH_REPETITIONS must be positive")
        if self.max_cycle_len < 3:
            raise ValueError("CACTUS_MAX_CYCLE_LEN must be at least 3")
        low, high = self.weight_range
        if not 0 < low <= high:
            raise ValueError(f"CACTUS_WEIGHT_RANGE must satisfy 0 < low <= high, got {self.weight_range}")

    def configure_logging(self):
        """Send log records to standard error in the project format."""
        logging.basicConfig(level=self.log_level, format=LOG_FORMAT)
        logger.debug(f"Logging configured at {self.log_level}")


# Global solver configuration instance
solver_config = SolverConfig()
