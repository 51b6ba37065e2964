"""Exception hierarchy shared by every package."""

from typing import Optional

import numpy as np


class EpidemicModelError(Exception):
    """Base class for all errors raised by the model packages."""


class DomainError(EpidemicModelError, ValueError):
    """A parameter lies outside the domain the model is defined on."""


class ConfigurationError(EpidemicModelError, ValueError):
    """Inputs are individually valid but inconsistent with each other."""


class ContractViolationError(EpidemicModelError, ValueError):
    """An operation was called on inputs that break its precondition."""


class ConvergenceError(EpidemicModelError, RuntimeError):
    """
    An iterative solver stopped before reaching its tolerance.

    Attributes:
        last_iterate: Iterate at the moment the solver gave up
        residual: Residual of that iterate
    """

    def __init__(
        self,
        message: str,
        last_iterate: Optional[np.ndarray] = None,
        residual: float = float("nan"),
    ):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.residual = residual


class ConfigValidationError(EpidemicModelError, ValueError):
    """
    An experiment config failed validation.

    Attributes:
        errors: One message per offending field
    """

    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        joined = "\n".join(f"  - {e}" for e in self.errors)
        super().__init__(f"Invalid experiment config:\n{joined}")


class OutputError(EpidemicModelError, OSError):
    """Writing a result artifact failed."""
