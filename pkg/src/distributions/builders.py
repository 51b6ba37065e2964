"""Constructors for the degree, weight and trait laws used by the experiments."""

import logging
from typing import Callable, Iterable, Mapping

import numpy as np
from scipy import stats

from common.errors import DomainError

from .models import (
    DegreeDistribution,
    TraitDistribution,
    WeightKernel,
    WeightPmf,
)

logger = logging.getLogger(__name__)

# Slack allowed when a two-point atom lands a rounding error outside [0,1].
_ATOM_SLACK = 1e-12


def _clip_atom(value: float, label: str) -> float:
    if value < -_ATOM_SLACK or value > 1.0 + _ATOM_SLACK:
        raise DomainError(f"{label} atom {value!r} lies outside [0,1]")
    return min(max(value, 0.0), 1.0)


def make_two_point_trait(
    mu_x: float,
    cv_x: float,
    mu_y: float,
    cv_y: float,
    rho: float,
) -> TraitDistribution:
    """
    Two-point susceptibility/infectivity law with equal high/low proportions.

    X takes mu_x ± mu_x·cv_x and Y takes mu_y ± mu_y·cv_y. The concordant
    corners (low, low) and (high, high) carry (1+rho)/4 each, the discordant
    ones (1-rho)/4, which gives corr(X, Y) = rho exactly. A zero CV collapses
    the corresponding marginal and merges atoms.

    Args:
        mu_x: Mean susceptibility in (0, 1)
        cv_x: Coefficient of variation of X (>= 0)
        mu_y: Mean infectivity in (0, 1)
        cv_y: Coefficient of variation of Y (>= 0)
        rho: Target correlation in [-1, 1]

    Returns:
        TraitDistribution with at most four atoms

    Raises:
        DomainError: If an atom leaves [0,1] or |rho| > 1
    """
    for name, mu in (("mu_x", mu_x), ("mu_y", mu_y)):
        if not 0.0 < mu < 1.0:
            raise DomainError(f"{name} must lie in (0, 1), got {mu}")
    for name, cv in (("cv_x", cv_x), ("cv_y", cv_y)):
        if cv < 0:
            raise DomainError(f"{name} must be non-negative, got {cv}")
    if abs(rho) > 1.0:
        raise DomainError(f"|rho| must be <= 1, got {rho}")

    delta_x = mu_x * cv_x
    delta_y = mu_y * cv_y
    x_lo = _clip_atom(mu_x - delta_x, "X")
    x_hi = _clip_atom(mu_x + delta_x, "X")
    y_lo = _clip_atom(mu_y - delta_y, "Y")
    y_hi = _clip_atom(mu_y + delta_y, "Y")

    concordant = (1.0 + rho) / 4.0
    discordant = (1.0 - rho) / 4.0
    return TraitDistribution.from_atoms([
        (x_lo, y_lo, concordant),
        (x_hi, y_hi, concordant),
        (x_lo, y_hi, discordant),
        (x_hi, y_lo, discordant),
    ])


def make_constant_trait(x: float, y: float) -> TraitDistribution:
    """Every individual has susceptibility x and infectivity y."""
    return TraitDistribution.from_atoms([(x, y, 1.0)])


def make_explicit_trait(atoms: Iterable[tuple[float, float, float]]) -> TraitDistribution:
    """Trait law from (x, y, weight) triples, normalised to sum to one."""
    atoms = [tuple(map(float, a)) for a in atoms]
    total = sum(p for _, _, p in atoms)
    if total <= 0:
        raise DomainError("trait atoms have no positive mass")
    return TraitDistribution.from_atoms([(x, y, p / total) for x, y, p in atoms])


def max_feasible_cv(mu: float) -> float:
    """Largest CV whose two-point atoms mu ± mu·CV stay inside [0,1] (capped at 1)."""
    if not 0.0 < mu < 1.0:
        raise DomainError(f"mu must lie in (0, 1), got {mu}")
    return min(1.0, (1.0 - mu) / mu)


def make_truncated_poisson(lam: float, dmax: int) -> DegreeDistribution:
    """
    Poisson(lam) conditioned on D <= dmax.

    `lam` is the pre-truncation parameter; the realised mean is slightly
    smaller and is reported, not assumed.

    Raises:
        DomainError: If lam <= 0 or dmax < 0
    """
    if lam <= 0:
        raise DomainError(f"lambda must be positive, got {lam}")
    if dmax < 0:
        raise DomainError(f"dmax must be non-negative, got {dmax}")

    support = np.arange(int(dmax) + 1)
    weights = stats.poisson.pmf(support, lam)
    probs = weights / weights.sum()
    dist = DegreeDistribution(
        values=tuple(int(d) for d in support),
        probs=tuple(float(p) for p in probs),
    )
    logger.debug(f"Truncated Poisson({lam}, {dmax}): realised mean {dist.mean:.6f}")
    return dist


def make_constant_degree(degree: int) -> DegreeDistribution:
    """Every node has exactly `degree` half-edges."""
    if degree < 0:
        raise DomainError(f"degree must be non-negative, got {degree}")
    return DegreeDistribution(values=(int(degree),), probs=(1.0,))


def make_explicit_degree(pmf: Mapping[int, float]) -> DegreeDistribution:
    """Degree law from a degree -> weight mapping (normalised)."""
    return DegreeDistribution.from_mapping(pmf)


def size_biased(degree: DegreeDistribution) -> DegreeDistribution:
    """
    Law of the degree found at the end of a uniformly chosen edge.

    Raises:
        DomainError: If the mean degree is zero
    """
    mean = degree.mean
    if mean <= 0:
        raise DomainError("size-biasing needs a positive mean degree")
    return DegreeDistribution.from_mapping(
        {d: d * p / mean for d, p in degree.items()}
    )


def make_constant_weight(weight: int = 1) -> WeightKernel:
    """Degree-independent point mass at `weight` (weight 1 = unweighted)."""
    return WeightKernel.degree_independent(WeightPmf(values=(int(weight),), probs=(1.0,)))


def make_explicit_weight(pmf: Mapping[int, float]) -> WeightKernel:
    """Degree-independent weight law from a weight -> weight mapping."""
    return WeightKernel.degree_independent(WeightPmf.from_mapping(pmf))


def make_two_point_weight_kernel(
    low: int,
    high: int,
    q_low: Callable[[int], float],
    degrees: Iterable[int],
) -> WeightKernel:
    """
    Weights in {low, high} with q(low|d) given per degree.

    Args:
        low: Small weight
        high: Large weight
        q_low: Function d -> q(low|d)
        degrees: Degrees to build rows for (degree 0 is skipped)

    Raises:
        DomainError: If q(low|d) leaves [0,1] or low >= high
    """
    if not 1 <= low < high:
        raise DomainError(f"need 1 <= low < high, got low={low}, high={high}")

    rows = {}
    for d in degrees:
        if d < 1:
            continue
        q = float(q_low(d))
        if not -_ATOM_SLACK <= q <= 1.0 + _ATOM_SLACK:
            raise DomainError(f"q({low}|{d}) = {q} lies outside [0,1]")
        q = min(max(q, 0.0), 1.0)
        rows[int(d)] = WeightPmf.from_mapping({low: q, high: 1.0 - q})
    return WeightKernel(rows=rows)


def power_law_q_low(a: float, b: float, exponent: float) -> Callable[[int], float]:
    """q(low|d) = a + b·d^exponent; (1, -1, -2) and (0, 1, -2) give 1-d⁻² and d⁻²."""

    def q_low(d: int) -> float:
        return a + b * float(d) ** exponent

    return q_low
