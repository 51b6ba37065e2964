"""Mean offspring matrix of the approximating multitype branching process."""

import logging
from dataclasses import dataclass

import numpy as np

from distributions.models import DegreeDistribution, TraitDistribution, WeightKernel
from epidemic.transmission import transmission_prob

from .type_space import TypeSpace, build_type_space, edge_type_distribution

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class OffspringMatrix:
    """
    Offspring structure over a TypeSpace.

    `per_edge[t1, t2]` is the probability that one onward edge of a type-t1
    infective produces a type-t2 infection; `values = (d1 - 1)·per_edge`
    is the mean offspring matrix M.
    """

    space: TypeSpace
    per_edge: np.ndarray
    values: np.ndarray

    @property
    def onward_edges(self) -> np.ndarray:
        """max(d - 1, 0) for every type."""
        return np.maximum(self.space.degrees - 1, 0)

    @property
    def trace(self) -> float:
        return float(np.trace(self.values))


def build_offspring_matrix(
    deg: DegreeDistribution,
    kernel: WeightKernel,
    traits: TraitDistribution,
) -> OffspringMatrix:
    """
    m[t1, t2] = (d1 - 1)·Σ_w q(w|d1)·t(w, y1, x2)·p̃_w(t2).

    Raises:
        ConfigurationError: If the kernel misses a positive support degree
        DomainError: Propagated from edge_type_distribution
    """
    kernel.validate_against(deg)
    space = build_type_space(deg, traits)
    per_edge = np.zeros((space.size, space.size))

    for w in kernel.weights(deg.positive_degrees):
        q = np.array([kernel.prob(w, int(d)) for d in space.degrees])
        far_end = edge_type_distribution(w, deg, kernel, traits)
        t = transmission_prob(w, space.y[:, None], space.x[None, :])
        per_edge += q[:, None] * t * far_end[None, :]

    values = np.maximum(space.degrees - 1, 0)[:, None] * per_edge
    logger.debug(f"Offspring matrix over {space.size} types, trace {np.trace(values):.6g}")
    return OffspringMatrix(space=space, per_edge=per_edge, values=values)
