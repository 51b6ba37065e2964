"""
Symmetric two-type model: constant degree d, unit weights, X = Y taking
μ(1 - CV) or μ(1 + CV) with equal probability.

The outbreak probability here is written with explicit trinomial sums over
how many neighbours of each type get infected, which serves as an
independent check on the general solver.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import stats

from common.errors import ConvergenceError, DomainError

from .extinction import DEFAULT_MAX_ITER, DEFAULT_TOL

logger = logging.getLogger(__name__)


def r0_example4(d: int, mu: float, cv: float) -> float:
    """R0 = μ²(1 + CV²)(d - 1)."""
    return mu ** 2 * (1.0 + cv ** 2) * (d - 1)


def example4_critical_cv(d: int, mu: float) -> Optional[float]:
    """CV at which R0 crosses 1, or None if R0 > 1 already at CV = 0."""
    gap = 1.0 / ((d - 1) * mu ** 2) - 1.0
    if gap < 0:
        return None
    return math.sqrt(gap)


def _type_levels(mu: float, cv: float) -> tuple[float, float]:
    low, high = mu * (1.0 - cv), mu * (1.0 + cv)
    if low < 0 or high > 1:
        raise DomainError(f"levels {low}, {high} leave [0, 1] for mu={mu}, cv={cv}")
    return low, high


def offspring_pmf_example4(i: int, n_edges: int, mu1: float, mu2: float) -> np.ndarray:
    """
    Joint law of (k, l) infections of type 1 and type 2 among `n_edges`
    neighbours of a type-i infective.

    Each neighbour is of either type with probability 1/2 and is infected
    with probability μ_i·μ_j, so the counts are trinomial with cell
    probabilities μ_iμ_1/2, μ_iμ_2/2 and the remainder.

    Returns:
        Array P with P[k, l] for k + l <= n_edges, zero elsewhere

    Raises:
        DomainError: If i is not 1 or 2 or the cell probabilities are invalid
    """
    if i not in (1, 2):
        raise DomainError(f"type must be 1 or 2, got {i}")
    if n_edges < 0:
        raise DomainError(f"n_edges must be >= 0, got {n_edges}")
    mu_i = mu1 if i == 1 else mu2
    p_k = mu_i * mu1 / 2.0
    p_l = mu_i * mu2 / 2.0
    if min(p_k, p_l) < 0 or p_k > 1 or p_l > 1 or p_k + p_l > 1:
        raise DomainError(f"invalid trinomial probabilities ({p_k}, {p_l})")

    pmf = np.zeros((n_edges + 1, n_edges + 1))
    if n_edges == 0:
        pmf[0, 0] = 1.0
        return pmf

    law = stats.multinomial(n_edges, [p_k, p_l, 1.0 - p_k - p_l])
    for k in range(n_edges + 1):
        for l in range(n_edges + 1 - k):
            pmf[k, l] = law.pmf([k, l, n_edges - k - l])
    return pmf


def _trinomial_expectation(pmf: np.ndarray, s1: float, s2: float) -> float:
    """Σ_{k,l} P[k, l]·s1^k·s2^l."""
    k = np.arange(pmf.shape[0])
    return float(np.power(s1, k) @ pmf @ np.power(s2, k))


@dataclass(frozen=True)
class Example4Solution:
    pi_prime: tuple[float, float]
    """Outbreak probability of a type-1 / type-2 individual reached along an edge"""

    pi_index: tuple[float, float]
    """Outbreak probability of a type-1 / type-2 index case"""

    pi: float
    iterations: int
    residual: float


def example4_extinction_multinomial(
    d: int,
    mu: float,
    cv: float,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> Example4Solution:
    """
    Outbreak probability of the symmetric two-type model from trinomial sums.

    Solves 1 - π'_i = Σ_{k,l} P_i(d-1, k, l)(1 - π'_1)^k(1 - π'_2)^l from
    π' ≡ 1, then π_i = 1 - Σ_{k,l} P_i(d, k, l)(1 - π'_1)^k(1 - π'_2)^l and
    π = (π_1 + π_2)/2. Returns zeros when R0 <= 1.

    Raises:
        DomainError: If the type levels leave [0, 1]
        ConvergenceError: If `max_iter` is reached
    """
    mu1, mu2 = _type_levels(mu, cv)
    if r0_example4(d, mu, cv) <= 1.0:
        return Example4Solution((0.0, 0.0), (0.0, 0.0), 0.0, 0, 0.0)

    onward = [offspring_pmf_example4(i, d - 1, mu1, mu2) for i in (1, 2)]
    index = [offspring_pmf_example4(i, d, mu1, mu2) for i in (1, 2)]

    s1 = s2 = 0.0
    step = math.inf
    for iteration in range(1, max_iter + 1):
        n1 = _trinomial_expectation(onward[0], s1, s2)
        n2 = _trinomial_expectation(onward[1], s1, s2)
        step = max(abs(n1 - s1), abs(n2 - s2))
        s1, s2 = n1, n2
        if step <= tol:
            break
    else:
        raise ConvergenceError(
            f"trinomial iteration did not converge in {max_iter} iterations",
            last_iterate=np.array([1.0 - s1, 1.0 - s2]),
            residual=step,
        )

    residual = max(
        abs(_trinomial_expectation(onward[0], s1, s2) - s1),
        abs(_trinomial_expectation(onward[1], s1, s2) - s2),
    )
    pi_1 = 1.0 - _trinomial_expectation(index[0], s1, s2)
    pi_2 = 1.0 - _trinomial_expectation(index[1], s1, s2)
    logger.debug(f"Trinomial fixed point (cv={cv}) after {iteration} iterations")
    return Example4Solution(
        pi_prime=(1.0 - s1, 1.0 - s2),
        pi_index=(pi_1, pi_2),
        pi=(pi_1 + pi_2) / 2.0,
        iterations=iteration,
        residual=residual,
    )
