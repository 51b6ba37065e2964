"""Per-edge transmission probability."""

from typing import Union

import numpy as np

from common.errors import DomainError

ArrayLike = Union[float, np.ndarray]


def transmission_prob(w: ArrayLike, y1: ArrayLike, x2: ArrayLike) -> ArrayLike:
    """
    Probability that an infective with infectivity y1 infects a susceptible
    with susceptibility x2 across an edge carrying w contacts:
    t = 1 - (1 - y1·x2)^w.

    Accepts scalars or broadcastable arrays; returns a float for scalar input.

    Raises:
        DomainError: If w < 1 or a trait lies outside [0, 1]
    """
    w_arr = np.asarray(w)
    y_arr = np.asarray(y1, dtype=float)
    x_arr = np.asarray(x2, dtype=float)
    if np.any(w_arr < 1):
        raise DomainError("edge weight must be >= 1")
    if np.any((y_arr < 0) | (y_arr > 1)) or np.any((x_arr < 0) | (x_arr > 1)):
        raise DomainError("infectivity and susceptibility must lie in [0, 1]")

    prob = 1.0 - np.power(1.0 - y_arr * x_arr, w_arr)
    if np.ndim(prob) == 0:
        return float(prob)
    return prob
