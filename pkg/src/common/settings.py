"""Runtime settings read from the environment (and an optional .env file)."""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

_VARIABLES = {
    'log_level': "EPINET_LOG_LEVEL",
    'workers': "EPINET_WORKERS",
    'output_dir': "EPINET_OUTPUT_DIR",
    'log_file': "EPINET_LOG_FILE",
}


@dataclass
class RuntimeSettings:
    """
    Process-wide defaults that CLI flags may override.

    Loaded from environment variables:
    - EPINET_LOG_LEVEL: level for library log records
    - EPINET_WORKERS: worker processes for grid points and replicates
    - EPINET_OUTPUT_DIR: directory for CSV, plot and diagnostics files
    - EPINET_LOG_FILE: optional file mirror of the terminal log
    """

    log_level: str = "WARNING"
    """Logging level name (DEBUG, INFO, WARNING, ERROR)"""

    workers: int = 1
    """Number of worker processes (1 = run inline)"""

    output_dir: Path = Path("results")
    """Default output directory"""

    log_file: Optional[Path] = None
    """Optional log file path"""

    explicit: frozenset[str] = field(default_factory=frozenset)
    """Names of the settings that came from the environment rather than defaults"""

    def __post_init__(self):
        self.log_level = self.log_level.upper()
        self.output_dir = Path(self.output_dir)
        if self.log_file is not None:
            self.log_file = Path(self.log_file)
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    def to_dict(self) -> dict:
        """Convert settings to dictionary."""
        return {
            'log_level': self.log_level,
            'workers': self.workers,
            'output_dir': str(self.output_dir),
            'log_file': str(self.log_file) if self.log_file else None,
        }

    def config_overrides(self) -> dict:
        """
        Experiment config fields to override with environment settings.

        Only `output` and `workers` are covered, and only when the matching
        variable was set; unset variables leave the config's own values.
        """
        overrides = {}
        if 'output_dir' in self.explicit:
            overrides['output'] = str(self.output_dir)
        if 'workers' in self.explicit:
            overrides['workers'] = self.workers
        return overrides


def load_settings(env_file: Optional[Path] = None) -> RuntimeSettings:
    """
    Load settings from the environment.

    Args:
        env_file: Optional explicit .env path (default: search upwards from cwd)

    Returns:
        RuntimeSettings populated from EPINET_* variables
    """
    load_dotenv(dotenv_path=env_file)

    log_file = os.getenv("EPINET_LOG_FILE")
    explicit = frozenset(
        name for name, variable in _VARIABLES.items() if os.getenv(variable)
    )
    return RuntimeSettings(
        log_level=os.getenv("EPINET_LOG_LEVEL", "WARNING"),
        workers=int(os.getenv("EPINET_WORKERS", "1")),
        output_dir=Path(os.getenv("EPINET_OUTPUT_DIR", "results")),
        log_file=Path(log_file) if log_file else None,
        explicit=explicit,
    )
