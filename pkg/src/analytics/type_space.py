"""Finite type space of (degree, susceptibility, infectivity) triples."""

from dataclasses import dataclass

import numpy as np

from common.errors import DomainError
from distributions.models import DegreeDistribution, TraitDistribution, WeightKernel


@dataclass(frozen=True, eq=False)
class TypeSpace:
    """
    Types enumerated degree-major: all trait atoms of the smallest degree
    first. Degrees 0 and 1 are kept; they have zero offspring rows.
    """

    degrees: np.ndarray
    x: np.ndarray
    y: np.ndarray
    probs: np.ndarray
    """p_D(d)·p_{X,Y}(x, y)"""

    @property
    def size(self) -> int:
        return int(self.degrees.size)

    def index(self, d: int, x: float, y: float) -> int:
        """
        Position of type (d, x, y).

        Raises:
            KeyError: If the type is not in the space
        """
        hits = np.flatnonzero((self.degrees == d) & (self.x == x) & (self.y == y))
        if hits.size == 0:
            raise KeyError((d, x, y))
        return int(hits[0])

    def types(self) -> list[tuple[int, float, float]]:
        return list(zip(self.degrees.tolist(), self.x.tolist(), self.y.tolist()))


def build_type_space(deg: DegreeDistribution, traits: TraitDistribution) -> TypeSpace:
    """Cartesian product of the degree support and the trait atoms."""
    n_atoms = len(traits.atoms)
    degrees = np.repeat(deg.value_array, n_atoms)
    probs = np.outer(deg.prob_array, traits.prob_array).ravel()
    return TypeSpace(
        degrees=degrees,
        x=np.tile(traits.x_array, len(deg.values)),
        y=np.tile(traits.y_array, len(deg.values)),
        probs=probs,
    )


def edge_type_distribution(
    w: int,
    deg: DegreeDistribution,
    kernel: WeightKernel,
    traits: TraitDistribution,
) -> np.ndarray:
    """
    Law of the type at the far end of an edge of weight `w`.

    p̃_w(d, x, y) = q(w|d)·d·p_D(d)·p_{X,Y}(x, y) / Σ_d' q(w|d')·d'·p_D(d'),
    indexed like build_type_space(deg, traits).

    Raises:
        DomainError: If no half-edge can carry weight `w`
    """
    space = build_type_space(deg, traits)
    q = np.array([kernel.prob(w, int(d)) for d in space.degrees])
    numerator = q * space.degrees * space.probs
    total = float(numerator.sum())
    if total <= 0.0:
        raise DomainError(f"no half-edge carries weight {w}")
    return numerator / total
