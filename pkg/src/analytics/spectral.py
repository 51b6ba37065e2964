"""Perron root of a non-negative matrix by power iteration."""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np

from common.errors import ConvergenceError, DomainError

from .offspring import OffspringMatrix

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 100_000
# Relative size of the diagonal shift that breaks periodicity
SHIFT = 1e-9


@dataclass(frozen=True)
class PowerIterationResult:
    value: float
    vector: np.ndarray
    iterations: int


def power_iteration(
    matrix: Union[OffspringMatrix, np.ndarray],
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> PowerIterationResult:
    """
    Dominant eigenvalue and eigenvector of a non-negative square matrix.

    Iterates on M + εI (ε = 1e-9·max entry) with infinity-norm scaling and
    stops once successive Rayleigh quotients differ by at most `tol`; ε is
    subtracted from the returned value.

    Raises:
        DomainError: If the matrix is not square or has negative entries,
            or if `max_iter` is below 1
        ConvergenceError: If `max_iter` is reached first (carries the last vector)
    """
    values = matrix.values if isinstance(matrix, OffspringMatrix) else np.asarray(matrix, dtype=float)
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {values.shape}")
    if np.any(values < 0):
        raise DomainError("matrix has negative entries")
    if max_iter < 1:
        raise DomainError(f"max_iter must be >= 1, got {max_iter}")

    size = values.shape[0]
    largest = float(values.max()) if values.size else 0.0
    if largest == 0.0:
        return PowerIterationResult(value=0.0, vector=np.ones(size), iterations=0)

    shift = SHIFT * largest
    shifted = values + shift * np.eye(size)
    vector = np.ones(size)
    estimate = None
    for iteration in range(1, max_iter + 1):
        image = shifted @ vector
        current = float(vector @ image) / float(vector @ vector)
        vector = image / np.max(image)
        if estimate is not None and abs(current - estimate) <= tol:
            logger.debug(f"Power iteration converged after {iteration} steps: {current - shift:.12g}")
            return PowerIterationResult(value=current - shift, vector=vector, iterations=iteration)
        estimate = current

    raise ConvergenceError(
        f"power iteration did not converge in {max_iter} iterations",
        last_iterate=vector,
        residual=float(np.max(np.abs(shifted @ vector - current * vector))),
    )


def spectral_radius(
    matrix: Union[OffspringMatrix, np.ndarray],
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> float:
    """R0: the Perron root of the mean offspring matrix."""
    return power_iteration(matrix, tol, max_iter).value
