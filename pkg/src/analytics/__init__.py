"""Offspring matrices, R0, closed forms and outbreak probabilities."""

from .closed_forms import (
    appendix_g,
    appendix_g_prime,
    closed_form_r0,
    jensen_gap,
    r0_fixed_degree_random_weight,
    r0_negbin,
    r0_negbin_derivative,
    r0_unweighted_closed_form,
)
from .example4 import (
    Example4Solution,
    example4_critical_cv,
    example4_extinction_multinomial,
    offspring_pmf_example4,
    r0_example4,
)
from .extinction import ExtinctionSolution, extinction_probabilities
from .offspring import OffspringMatrix, build_offspring_matrix
from .spectral import PowerIterationResult, power_iteration, spectral_radius
from .type_space import TypeSpace, build_type_space, edge_type_distribution

__all__ = [
    "Example4Solution",
    "ExtinctionSolution",
    "OffspringMatrix",
    "PowerIterationResult",
    "TypeSpace",
    "appendix_g",
    "appendix_g_prime",
    "build_offspring_matrix",
    "build_type_space",
    "closed_form_r0",
    "edge_type_distribution",
    "example4_critical_cv",
    "example4_extinction_multinomial",
    "extinction_probabilities",
    "jensen_gap",
    "offspring_pmf_example4",
    "power_iteration",
    "r0_example4",
    "r0_fixed_degree_random_weight",
    "r0_negbin",
    "r0_negbin_derivative",
    "r0_unweighted_closed_form",
    "spectral_radius",
]
