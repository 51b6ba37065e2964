"""Exact moments by pmf summation."""

from dataclasses import dataclass
from functools import singledispatch
from typing import Optional

import numpy as np

from common.errors import DomainError

from .models import DiscretePmf, NegBinParams, TraitDistribution, WeightKernel


@dataclass(frozen=True)
class Moments:
    """Mean, variance and coefficient of variation of a scalar law."""

    mean: float
    variance: float
    cv: float


@dataclass(frozen=True)
class TraitMoments:
    """Marginal moments of (X, Y) plus their covariance and correlation."""

    x: Moments
    y: Moments
    covariance: float
    correlation: Optional[float]
    """None when either marginal is degenerate"""


def _scalar_moments(values: np.ndarray, probs: np.ndarray) -> Moments:
    mean = float(values @ probs)
    variance = float(((values - mean) ** 2) @ probs)
    # Rounding noise from the subtraction above is not real dispersion.
    if variance < 1e-30:
        variance = 0.0
    return Moments(mean=mean, variance=variance, cv=_cv(mean, variance))


def _cv(mean: float, variance: float) -> float:
    if variance == 0.0:
        return 0.0
    if mean == 0.0:
        raise DomainError("coefficient of variation is undefined for zero mean and positive variance")
    return float(np.sqrt(variance) / abs(mean))


@singledispatch
def moments(dist) -> Moments:
    """
    Exact moments of a distribution.

    Supported: DegreeDistribution / WeightPmf (any DiscretePmf), a
    degree-independent WeightKernel, NegBinParams (closed form) and
    TraitDistribution (returns TraitMoments).

    Raises:
        DomainError: If the CV is undefined (zero mean, positive variance)
        TypeError: For unsupported objects
    """
    raise TypeError(f"moments() does not support {type(dist).__name__}")


@moments.register
def _(dist: DiscretePmf) -> Moments:
    return _scalar_moments(dist.value_array.astype(float), dist.prob_array)


@moments.register
def _(kernel: WeightKernel) -> Moments:
    if not kernel.is_degree_independent:
        raise TypeError("moments() of a degree-dependent kernel needs a degree; use kernel.row(d)")
    return moments(kernel.default)


@moments.register
def _(params: NegBinParams) -> Moments:
    return Moments(mean=params.mean, variance=params.variance, cv=params.cv)


@moments.register
def _(traits: TraitDistribution) -> TraitMoments:
    return trait_moments(traits)


def trait_moments(traits: TraitDistribution) -> TraitMoments:
    """Marginal moments, covariance and correlation of a trait law."""
    xs, ys, probs = traits.x_array, traits.y_array, traits.prob_array
    mx = _scalar_moments(xs, probs)
    my = _scalar_moments(ys, probs)
    covariance = float(((xs - mx.mean) * (ys - my.mean)) @ probs)

    correlation = None
    if mx.variance > 0 and my.variance > 0:
        correlation = covariance / float(np.sqrt(mx.variance * my.variance))
    return TraitMoments(x=mx, y=my, covariance=covariance, correlation=correlation)
