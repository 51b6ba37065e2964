"""Negative binomial edge weights W ~ NB(r, phi) on {r, r+1, ...}."""

import logging

import numpy as np
from scipy import stats

from common.errors import DomainError

from .models import NegBinParams, WeightKernel, WeightPmf

logger = logging.getLogger(__name__)

DEFAULT_MASS_TOL = 1e-12


def negbin_params(r: float, mu_w: float) -> NegBinParams:
    """
    Parameters with mean mu_w, i.e. phi = r / mu_w.

    Raises:
        DomainError: If r > mu_w (phi would exceed 1)
    """
    if mu_w <= 0:
        raise DomainError(f"mu_w must be positive, got {mu_w}")
    if r > mu_w:
        raise DomainError(f"r={r} exceeds mu_w={mu_w}; need phi = r/mu_w <= 1")
    return NegBinParams(r=r, phi=r / mu_w)


def make_negbin_weight(r: int, mu_w: float, mass_tol: float = DEFAULT_MASS_TOL) -> WeightKernel:
    """
    Degree-independent weight kernel with W ~ NB(r, r/mu_w).

    P(W=w) = C(w-1, r-1) phi^r (1-phi)^(w-r) for w >= r, truncated at the
    smallest w* whose cumulative mass reaches 1 - mass_tol and renormalised.

    Args:
        r: Positive integer shape
        mu_w: Target mean weight (>= r)
        mass_tol: Tail mass discarded by the truncation

    Returns:
        WeightKernel with a single default row

    Raises:
        DomainError: If r is not a positive integer, r > mu_w, or mass_tol is not in (0, 1)
    """
    if int(r) != r or r < 1:
        raise DomainError(f"r must be a positive integer for a weight pmf, got {r}")
    if not 0.0 < mass_tol < 1.0:
        raise DomainError(f"mass_tol must lie in (0, 1), got {mass_tol}")
    r = int(r)
    params = negbin_params(r, mu_w)

    if params.phi >= 1.0:
        return WeightKernel.degree_independent(WeightPmf(values=(r,), probs=(1.0,)))

    # scipy counts failures k = W - r before the r-th success
    k_max = int(stats.nbinom.ppf(1.0 - mass_tol, r, params.phi))
    failures = np.arange(k_max + 1)
    mass = stats.nbinom.pmf(failures, r, params.phi)
    logger.debug(
        f"NB(r={r}, phi={params.phi:.6g}) truncated at w*={r + k_max}, "
        f"discarded mass {1.0 - mass.sum():.3e}"
    )
    probs = mass / mass.sum()
    row = WeightPmf(
        values=tuple(int(r + k) for k in failures),
        probs=tuple(float(p) for p in probs),
    )
    return WeightKernel.degree_independent(row)


def negbin_pgf(s: float, r: float, phi: float) -> float:
    """G(s) = (s·phi / (1 - s(1-phi)))^r, the pgf of NB(r, phi) on {r, r+1, ...}."""
    if not 0.0 <= s <= 1.0:
        raise DomainError(f"s must lie in [0, 1], got {s}")
    return float((s * phi / (1.0 - s * (1.0 - phi))) ** r)
