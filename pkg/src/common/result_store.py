"""File-based storage for experiment outputs."""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import pandas as pd

from .errors import OutputError

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.12g"


@dataclass(frozen=True)
class ResultPaths:
    csv: Path
    plot: Path
    diagnostics: Path


class ResultStore:
    """
    Stores experiment artifacts under one output directory.

    Each experiment id maps to three files:
    1. `<id>.csv` - the result table
    2. `<id>.plot` - a gnuplot script reading the CSV
    3. `<id>.diagnostics.json` - per-row solver and simulation diagnostics
    """

    def __init__(self, output_dir: Path):
        """
        Initialize the result store.

        Args:
            output_dir: Directory the artifacts are written to (created on first write)
        """
        self.output_dir = Path(output_dir)

    def paths(self, experiment_id: str) -> ResultPaths:
        return ResultPaths(
            csv=self.output_dir / f"{experiment_id}.csv",
            plot=self.output_dir / f"{experiment_id}.plot",
            diagnostics=self.output_dir / f"{experiment_id}.diagnostics.json",
        )

    def _write_text(self, path: Path, text: str) -> Path:
        try:
            self.output_dir.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
        except OSError as e:
            raise OutputError(f"Failed to write {path}: {e}") from e
        logger.debug(f"Wrote {path}")
        return path

    def save_table(self, experiment_id: str, frame: pd.DataFrame) -> Path:
        """
        Write the result table; floats use %.12g and missing values stay empty.

        Raises:
            OutputError: If the file cannot be written
        """
        text = frame.to_csv(index=False, float_format=FLOAT_FORMAT, na_rep="", lineterminator="\n")
        return self._write_text(self.paths(experiment_id).csv, text)

    def save_plot(self, experiment_id: str, script: str) -> Path:
        return self._write_text(self.paths(experiment_id).plot, script)

    def save_diagnostics(self, experiment_id: str, diagnostics: Any) -> Path:
        text = json.dumps(diagnostics, indent=2, sort_keys=True, default=str) + "\n"
        return self._write_text(self.paths(experiment_id).diagnostics, text)

    def load_table(self, experiment_id: str) -> pd.DataFrame:
        """
        Read a stored result table back.

        Raises:
            OutputError: If the table does not exist or cannot be parsed
        """
        path = self.paths(experiment_id).csv
        try:
            return pd.read_csv(path)
        except (OSError, pd.errors.ParserError) as e:
            raise OutputError(f"Failed to read {path}: {e}") from e

    def list_results(self) -> list[str]:
        """Experiment ids that have a stored table."""
        if not self.output_dir.exists():
            return []
        return sorted(p.stem for p in self.output_dir.glob("*.csv"))
