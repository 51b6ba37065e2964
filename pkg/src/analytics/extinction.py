"""Outbreak probability from the extinction fixed point of the branching process."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from common.errors import ConvergenceError
from distributions.models import DegreeDistribution, TraitDistribution, WeightKernel

from .offspring import OffspringMatrix, build_offspring_matrix
from .spectral import spectral_radius

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 1_000_000


@dataclass(frozen=True, eq=False)
class ExtinctionSolution:
    """
    Outbreak probabilities.

    `pi_prime[t]` is the probability that a type-t individual reached along
    an edge starts a major outbreak; `pi` is the probability for an index
    case drawn from p_D·p_{X,Y} with all d of its neighbours susceptible.
    """

    pi_prime: np.ndarray
    pi: float
    r0: float
    iterations: int
    residual: float

    def to_dict(self) -> dict:
        return {
            'pi': self.pi,
            'r0': self.r0,
            'iterations': self.iterations,
            'residual': self.residual,
        }


def extinction_probabilities(
    deg: DegreeDistribution,
    kernel: WeightKernel,
    traits: TraitDistribution,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    matrix: Optional[OffspringMatrix] = None,
) -> ExtinctionSolution:
    """
    Solve 1 - π'_t = (q0_t + Σ_u P[t, u]·(1 - π'_u))^(d_t - 1).

    P is the per-edge offspring probability and q0_t = 1 - Σ_u P[t, u].
    The map is iterated from π' ≡ 1, which converges monotonically to the
    minimal fixed point. When R0 <= 1 the answer is π' ≡ 0 without iterating.

    Args:
        deg: Degree law
        kernel: Weight law given degree
        traits: Joint (X, Y) law
        tol: Sup-norm step size at which iteration stops
        max_iter: Iteration cap
        matrix: Prebuilt offspring matrix for these laws

    Returns:
        ExtinctionSolution

    Raises:
        ConvergenceError: If `max_iter` is reached (carries π' and the last step)
    """
    matrix = matrix if matrix is not None else build_offspring_matrix(deg, kernel, traits)
    r0 = spectral_radius(matrix)
    size = matrix.space.size

    if r0 <= 1.0:
        return ExtinctionSolution(
            pi_prime=np.zeros(size), pi=0.0, r0=r0, iterations=0, residual=0.0
        )

    per_edge = matrix.per_edge
    no_child = np.clip(1.0 - per_edge.sum(axis=1), 0.0, 1.0)
    onward = matrix.onward_edges

    # s = 1 - π'
    survival = np.zeros(size)
    step = np.inf
    for iteration in range(1, max_iter + 1):
        updated = (no_child + per_edge @ survival) ** onward
        step = float(np.max(np.abs(updated - survival)))
        survival = updated
        if step <= tol:
            break
    else:
        raise ConvergenceError(
            f"extinction iteration did not converge in {max_iter} iterations",
            last_iterate=1.0 - survival,
            residual=step,
        )

    edge_pgf = no_child + per_edge @ survival
    residual = float(np.max(np.abs(edge_pgf ** onward - survival)))
    pi = 1.0 - float(matrix.space.probs @ edge_pgf ** matrix.space.degrees)
    logger.debug(f"Extinction fixed point after {iteration} iterations: pi={pi:.12g}, residual={residual:.2e}")
    return ExtinctionSolution(
        pi_prime=1.0 - survival,
        pi=pi,
        r0=r0,
        iterations=iteration,
        residual=residual,
    )
