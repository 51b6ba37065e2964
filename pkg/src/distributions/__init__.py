"""Degree, weight and trait distributions with exact moments."""

from .builders import (
    make_constant_degree,
    make_constant_trait,
    make_constant_weight,
    make_explicit_degree,
    make_explicit_trait,
    make_explicit_weight,
    make_truncated_poisson,
    make_two_point_trait,
    make_two_point_weight_kernel,
    max_feasible_cv,
    power_law_q_low,
    size_biased,
)
from .models import (
    DegreeDistribution,
    DiscretePmf,
    NegBinParams,
    TraitDistribution,
    WeightKernel,
    WeightPmf,
)
from .moments import Moments, TraitMoments, moments, trait_moments
from .negbin import make_negbin_weight, negbin_params, negbin_pgf
from .spec import (
    ModelLaws,
    apply_sweep_value,
    degree_from_spec,
    laws_from_config,
    traits_from_spec,
    weight_from_spec,
)

__all__ = [
    "DegreeDistribution",
    "DiscretePmf",
    "ModelLaws",
    "Moments",
    "NegBinParams",
    "TraitDistribution",
    "TraitMoments",
    "WeightKernel",
    "WeightPmf",
    "apply_sweep_value",
    "degree_from_spec",
    "laws_from_config",
    "make_constant_degree",
    "make_constant_trait",
    "make_constant_weight",
    "make_explicit_degree",
    "make_explicit_trait",
    "make_explicit_weight",
    "make_negbin_weight",
    "make_truncated_poisson",
    "make_two_point_trait",
    "make_two_point_weight_kernel",
    "max_feasible_cv",
    "moments",
    "negbin_params",
    "negbin_pgf",
    "power_law_q_low",
    "size_biased",
    "trait_moments",
    "traits_from_spec",
    "weight_from_spec",
]
