"""Plain-text edge list: a `# n=<n>` header, then one `a b w` line per edge."""

import logging
import re
from pathlib import Path

import numpy as np

from common.errors import ConfigurationError, OutputError

from .graph import WeightedGraph

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"^#\s*n\s*=\s*(\d+)\s*$")


def dump_edge_list(graph: WeightedGraph, path: Path) -> Path:
    """
    Write `graph` as an edge list.

    Raises:
        OutputError: If the file cannot be written
    """
    path = Path(path)
    lines = [f"# n={graph.n}"]
    lines.extend(f"{a} {b} {w}" for a, b, w in graph.edges())
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("\n".join(lines) + "\n")
    except OSError as e:
        raise OutputError(f"Failed to write edge list {path}: {e}") from e
    logger.debug(f"Wrote {graph.edge_count} edges to {path}")
    return path


def load_edge_list(path: Path) -> WeightedGraph:
    """
    Read an edge list written by dump_edge_list.

    Raises:
        ConfigurationError: If the header is missing or a line is malformed
    """
    path = Path(path)
    lines = [line.strip() for line in path.read_text().splitlines() if line.strip()]
    if not lines or not (match := _HEADER.match(lines[0])):
        raise ConfigurationError(f"{path}: first line must be '# n=<n>'")
    n = int(match.group(1))

    rows = []
    for number, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 3:
            raise ConfigurationError(f"{path}:{number}: expected 'a b w', got {line!r}")
        try:
            rows.append(tuple(int(p) for p in parts))
        except ValueError as e:
            raise ConfigurationError(f"{path}:{number}: {e}") from e

    edges = np.array(rows, dtype=np.int64).reshape(-1, 3)
    return WeightedGraph(n=n, edge_a=edges[:, 0], edge_b=edges[:, 1], edge_w=edges[:, 2])
