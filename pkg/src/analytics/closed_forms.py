"""Closed-form reproduction numbers and the monotonicity helpers around them."""

import math
from typing import Optional, Union

import numpy as np

from common.errors import DomainError
from distributions.models import DegreeDistribution, TraitDistribution, WeightKernel, WeightPmf
from distributions.moments import trait_moments


def r0_unweighted_closed_form(
    mu_x: float,
    cv_x: float,
    mu_y: float,
    cv_y: float,
    rho: float,
    mu_d: float,
    var_d: float,
) -> float:
    """
    R0 of an unweighted network:
    μ_X·μ_Y·(1 + CV_X·CV_Y·ρ)·(μ_D + (σ²_D - μ_D)/μ_D).

    Raises:
        DomainError: If mu_d <= 0
    """
    if mu_d <= 0:
        raise DomainError(f"mean degree must be positive, got {mu_d}")
    return mu_x * mu_y * (1.0 + cv_x * cv_y * rho) * (mu_d + (var_d - mu_d) / mu_d)


def _weight_row(weights: Union[WeightPmf, WeightKernel], d: int) -> WeightPmf:
    if isinstance(weights, WeightKernel):
        return weights.row(d)
    return weights


def r0_fixed_degree_random_weight(
    d: int,
    p: float,
    weights: Union[WeightPmf, WeightKernel],
) -> float:
    """
    R0 = (d - 1)·(1 - G(1 - p)) for constant degree d, per-contact
    probability p and weight pgf G.

    Raises:
        DomainError: If d < 1 or p is outside [0, 1]
    """
    if d < 1:
        raise DomainError(f"degree must be >= 1, got {d}")
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must lie in [0, 1], got {p}")
    return (d - 1) * (1.0 - _weight_row(weights, d).pgf(1.0 - p))


def _check_negbin_args(p: float, r: float, mu_w: float) -> None:
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must lie in (0, 1), got {p}")
    if not 0.0 < r <= mu_w:
        raise DomainError(f"need 0 < r <= mu_w, got r={r}, mu_w={mu_w}")


def r0_negbin(d: int, p: float, r: float, mu_w: float) -> float:
    """
    Fixed degree with negative binomial weights:
    (d - 1)·(1 - ((1-p)(r/μ_W) / ((1-p)(r/μ_W) + p))^r).

    `r` may be any positive real here.

    Raises:
        DomainError: If p is outside (0, 1) or r is outside (0, mu_w]
    """
    _check_negbin_args(p, r, mu_w)
    scaled = (1.0 - p) * (r / mu_w)
    return (d - 1) * (1.0 - (scaled / (scaled + p)) ** r)


def appendix_g(z: float) -> float:
    """g(z) = log(1 + z) - z/(1 + z); zero at 0 and positive beyond."""
    if z < 0:
        raise DomainError(f"z must be non-negative, got {z}")
    return math.log1p(z) - z / (1.0 + z)


def appendix_g_prime(z: float) -> float:
    """g'(z) = 1/(1 + z) - 1/(1 + z)²."""
    if z < 0:
        raise DomainError(f"z must be non-negative, got {z}")
    return 1.0 / (1.0 + z) - 1.0 / (1.0 + z) ** 2


def r0_negbin_derivative(d: int, p: float, r: float, mu_w: float) -> float:
    """
    ∂R0/∂r of r0_negbin: (d - 1)·(1 + c/r)^(-r)·g(c/r) with c = p·μ_W/(1 - p).

    Positive for every r > 0, so R0 increases with r (and falls with CV_W).
    """
    _check_negbin_args(p, r, mu_w)
    z = p * mu_w / (1.0 - p) / r
    return (d - 1) * math.exp(-r * math.log1p(z)) * appendix_g(z)


def jensen_gap(
    d: int,
    p: float,
    weights: Union[WeightPmf, WeightKernel],
) -> tuple[float, float]:
    """
    R0 with random weights against R0 with every weight fixed at the mean.

    The fixed-mean value uses (d - 1)·(1 - (1 - p)^μ_W) directly, so μ_W
    need not be an integer. By Jensen the first value never exceeds the
    second.

    Returns:
        (r0_random, r0_fixed_mean)
    """
    row = _weight_row(weights, d)
    r0_random = r0_fixed_degree_random_weight(d, p, row)
    r0_fixed_mean = (d - 1) * (1.0 - (1.0 - p) ** row.mean)
    return r0_random, r0_fixed_mean


def closed_form_r0(
    deg: DegreeDistribution,
    kernel: WeightKernel,
    traits: TraitDistribution,
) -> Optional[float]:
    """
    Closed-form R0 when one applies, else None.

    Unweighted networks use the moment formula; a constant degree with a
    degree-independent kernel and a single trait atom uses the pgf formula
    with p = x·y.
    """
    if kernel.is_unweighted:
        tm = trait_moments(traits)
        rho = tm.correlation if tm.correlation is not None else 0.0
        return r0_unweighted_closed_form(
            tm.x.mean, tm.x.cv, tm.y.mean, tm.y.cv, rho, deg.mean, deg.variance
        )

    if len(deg.values) == 1 and kernel.is_degree_independent and len(traits.atoms) == 1:
        x, y, _ = traits.atoms[0]
        d = deg.values[0]
        if d < 1:
            return 0.0
        return r0_fixed_degree_random_weight(d, float(np.clip(x * y, 0.0, 1.0)), kernel.default)

    return None
