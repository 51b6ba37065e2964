"""Immutable degree, weight and trait distributions."""

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

import numpy as np

from common.errors import ConfigurationError, DomainError

PMF_TOLERANCE = 1e-12


def _check_probabilities(probs: tuple[float, ...], label: str) -> None:
    if not probs:
        raise DomainError(f"{label}: support is empty")
    arr = np.asarray(probs, dtype=float)
    if np.any(arr < 0) or not np.all(np.isfinite(arr)):
        raise DomainError(f"{label}: probabilities must be finite and non-negative")
    total = float(arr.sum())
    if abs(total - 1.0) > PMF_TOLERANCE:
        raise DomainError(f"{label}: probabilities sum to {total!r}, expected 1")


@dataclass(frozen=True)
class DiscretePmf:
    """
    Finite-support pmf over distinct, ascending integer values.

    Use `from_mapping` to build one from unnormalised weights.
    """

    values: tuple[int, ...]
    probs: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != len(self.probs):
            raise DomainError("values and probs must have the same length")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise DomainError(f"values must be distinct and ascending: {self.values}")
        _check_probabilities(self.probs, type(self).__name__)

    @classmethod
    def from_mapping(cls, weights: Mapping[int, float], normalize: bool = True):
        """
        Build a pmf from a value -> weight mapping.

        Zero-weight values are dropped; with `normalize` the weights are
        rescaled to sum to one.
        """
        items = sorted((int(v), float(p)) for v, p in weights.items() if p != 0)
        if any(p < 0 for _, p in items):
            raise DomainError("weights must be non-negative")
        if not items:
            raise DomainError("pmf has no positive mass")
        values = tuple(v for v, _ in items)
        probs = np.array([p for _, p in items])
        if normalize:
            probs = probs / probs.sum()
        return cls(values=values, probs=tuple(float(p) for p in probs))

    @property
    def value_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.int64)

    @property
    def prob_array(self) -> np.ndarray:
        return np.asarray(self.probs, dtype=float)

    def prob(self, value: int) -> float:
        """Probability of a single value (0 outside the support)."""
        try:
            return self.probs[self.values.index(int(value))]
        except ValueError:
            return 0.0

    @property
    def mean(self) -> float:
        return float(self.value_array @ self.prob_array)

    @property
    def variance(self) -> float:
        centred = self.value_array - self.mean
        return float((centred ** 2) @ self.prob_array)

    def pgf(self, s: float) -> float:
        """Probability generating function E[s^V]."""
        return float(np.power(float(s), self.value_array) @ self.prob_array)

    def items(self) -> Iterable[tuple[int, float]]:
        return zip(self.values, self.probs)


@dataclass(frozen=True)
class DegreeDistribution(DiscretePmf):
    """Degree pmf p_D over non-negative integers."""

    def __post_init__(self):
        super().__post_init__()
        if self.values and self.values[0] < 0:
            raise DomainError(f"degrees must be non-negative, got {self.values[0]}")

    @property
    def positive_degrees(self) -> tuple[int, ...]:
        """Support degrees with at least one half-edge."""
        return tuple(d for d in self.values if d >= 1)


@dataclass(frozen=True)
class WeightPmf(DiscretePmf):
    """Pmf of a positive integer edge weight."""

    def __post_init__(self):
        super().__post_init__()
        if self.values and self.values[0] < 1:
            raise DomainError(f"weights must be >= 1, got {self.values[0]}")


@dataclass(frozen=True)
class WeightKernel:
    """
    Conditional weight law q(w|d).

    Rows are looked up by degree; a kernel built with `default` uses that row
    for every degree without an explicit one.
    """

    rows: Mapping[int, WeightPmf] = field(default_factory=dict)
    default: Optional[WeightPmf] = None

    def __post_init__(self):
        object.__setattr__(self, "rows", {int(d): r for d, r in self.rows.items()})
        if not self.rows and self.default is None:
            raise DomainError("weight kernel needs at least one row or a default row")

    @classmethod
    def degree_independent(cls, row: WeightPmf) -> "WeightKernel":
        return cls(rows={}, default=row)

    @property
    def is_degree_independent(self) -> bool:
        return not self.rows and self.default is not None

    def row(self, degree: int) -> WeightPmf:
        """
        Weight pmf for half-edges of a degree-`degree` node.

        Raises:
            ConfigurationError: If the kernel has no row for this degree
        """
        row = self.rows.get(int(degree), self.default)
        if row is None:
            raise ConfigurationError(f"weight kernel has no row for degree {degree}")
        return row

    def prob(self, weight: int, degree: int) -> float:
        """q(w|d); zero when the degree has no row."""
        row = self.rows.get(int(degree), self.default)
        return 0.0 if row is None else row.prob(weight)

    def weights(self, degrees: Iterable[int]) -> tuple[int, ...]:
        """Union of the weight supports of the rows used by `degrees`."""
        support: set[int] = set()
        for d in degrees:
            support.update(self.row(d).values)
        return tuple(sorted(support))

    def validate_against(self, degree: DegreeDistribution) -> None:
        """
        Check that every positive support degree has a row.

        Raises:
            ConfigurationError: Listing the uncovered degrees
        """
        missing = [
            d for d in degree.positive_degrees
            if int(d) not in self.rows and self.default is None
        ]
        if missing:
            raise ConfigurationError(f"weight kernel has no rows for degrees {missing}")

    @property
    def is_unweighted(self) -> bool:
        """True when every row is the point mass at w=1."""
        rows = list(self.rows.values())
        if self.default is not None:
            rows.append(self.default)
        return all(r.values == (1,) for r in rows)


@dataclass(frozen=True)
class TraitDistribution:
    """
    Joint pmf of (susceptibility X, infectivity Y) on [0,1]².

    Atoms are (x, y, probability) triples. `from_atoms` merges duplicate
    locations and drops zero-mass atoms.
    """

    atoms: tuple[tuple[float, float, float], ...]

    def __post_init__(self):
        for x, y, _ in self.atoms:
            if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
                raise DomainError(f"trait atom ({x}, {y}) lies outside [0,1]²")
        _check_probabilities(tuple(p for _, _, p in self.atoms), "TraitDistribution")

    @classmethod
    def from_atoms(cls, atoms: Iterable[tuple[float, float, float]]) -> "TraitDistribution":
        merged: dict[tuple[float, float], float] = {}
        for x, y, p in atoms:
            if p < 0:
                raise DomainError(f"negative atom probability {p}")
            key = (float(x), float(y))
            merged[key] = merged.get(key, 0.0) + float(p)
        kept = tuple(
            (x, y, p) for (x, y), p in sorted(merged.items()) if p > 0
        )
        return cls(atoms=kept)

    @property
    def x_array(self) -> np.ndarray:
        return np.array([a[0] for a in self.atoms], dtype=float)

    @property
    def y_array(self) -> np.ndarray:
        return np.array([a[1] for a in self.atoms], dtype=float)

    @property
    def prob_array(self) -> np.ndarray:
        return np.array([a[2] for a in self.atoms], dtype=float)

    @property
    def is_symmetric(self) -> bool:
        """True when every atom has x == y."""
        return all(x == y for x, y, _ in self.atoms)


@dataclass(frozen=True)
class NegBinParams:
    """Negative binomial weight law on {r, r+1, ...} with mean r/phi."""

    r: float
    phi: float

    def __post_init__(self):
        if self.r <= 0:
            raise DomainError(f"r must be positive, got {self.r}")
        if not 0.0 < self.phi <= 1.0:
            raise DomainError(f"phi must lie in (0, 1], got {self.phi}")

    @property
    def mean(self) -> float:
        return self.r / self.phi

    @property
    def variance(self) -> float:
        return self.r * (1.0 - self.phi) / self.phi ** 2

    @property
    def cv(self) -> float:
        return float(np.sqrt(max(1.0 / self.r - 1.0 / self.mean, 0.0)))
