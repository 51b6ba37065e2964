"""Build distribution objects from the tagged records of an experiment config."""

from dataclasses import dataclass
from functools import singledispatch

from common.errors import ConfigurationError
from common.experiment_config import (
    ConstantDegreeSpec,
    ConstantTraitSpec,
    ConstantWeightSpec,
    ExperimentConfig,
    ExplicitDegreeSpec,
    ExplicitTraitSpec,
    ExplicitWeightSpec,
    NegBinomialWeightSpec,
    TruncatedPoissonSpec,
    TwoPointConditionalWeightSpec,
    TwoPointTraitSpec,
)

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
    power_law_q_low,
)
from .models import DegreeDistribution, TraitDistribution, WeightKernel
from .negbin import make_negbin_weight


@dataclass(frozen=True)
class ModelLaws:
    """The three laws that define one grid point of an experiment."""

    degree: DegreeDistribution
    kernel: WeightKernel
    traits: TraitDistribution


@singledispatch
def degree_from_spec(spec) -> DegreeDistribution:
    raise ConfigurationError(f"unsupported degree spec {type(spec).__name__}")


@degree_from_spec.register
def _(spec: ConstantDegreeSpec) -> DegreeDistribution:
    return make_constant_degree(spec.value)


@degree_from_spec.register
def _(spec: TruncatedPoissonSpec) -> DegreeDistribution:
    return make_truncated_poisson(spec.lam, spec.dmax)


@degree_from_spec.register
def _(spec: ExplicitDegreeSpec) -> DegreeDistribution:
    return make_explicit_degree(spec.pmf)


@singledispatch
def weight_from_spec(spec, degree: DegreeDistribution) -> WeightKernel:
    """
    Weight kernel for a record; degree-dependent kinds get one row per
    positive support degree of `degree`.
    """
    raise ConfigurationError(f"unsupported weight spec {type(spec).__name__}")


@weight_from_spec.register
def _(spec: ConstantWeightSpec, degree: DegreeDistribution) -> WeightKernel:
    return make_constant_weight(spec.value)


@weight_from_spec.register
def _(spec: TwoPointConditionalWeightSpec, degree: DegreeDistribution) -> WeightKernel:
    return make_two_point_weight_kernel(
        spec.low,
        spec.high,
        power_law_q_low(spec.a, spec.b, spec.exponent),
        degree.positive_degrees,
    )


@weight_from_spec.register
def _(spec: NegBinomialWeightSpec, degree: DegreeDistribution) -> WeightKernel:
    return make_negbin_weight(spec.r, spec.mu_w, spec.mass_tol)


@weight_from_spec.register
def _(spec: ExplicitWeightSpec, degree: DegreeDistribution) -> WeightKernel:
    return make_explicit_weight(spec.pmf)


@singledispatch
def traits_from_spec(spec) -> TraitDistribution:
    raise ConfigurationError(f"unsupported trait spec {type(spec).__name__}")


@traits_from_spec.register
def _(spec: ConstantTraitSpec) -> TraitDistribution:
    return make_constant_trait(spec.x, spec.y)


@traits_from_spec.register
def _(spec: TwoPointTraitSpec) -> TraitDistribution:
    return make_two_point_trait(spec.mu_x, spec.cv_x, spec.mu_y, spec.cv_y, spec.rho)


@traits_from_spec.register
def _(spec: ExplicitTraitSpec) -> TraitDistribution:
    return make_explicit_trait(spec.atoms)


def apply_sweep_value(config: ExperimentConfig, value: float) -> ExperimentConfig:
    """
    Copy of `config` with the swept parameter set to `value`.

    `cv` sets both CV_X and CV_Y; `r` sets the negative binomial shape.

    Raises:
        ConfigurationError: If the swept parameter does not belong to the
            config's trait or weight record
    """
    parameter = config.sweep.parameter
    if parameter == "r":
        if not isinstance(config.weight, NegBinomialWeightSpec):
            raise ConfigurationError("an r sweep needs a neg_binomial weight record")
        weight = config.weight.model_copy(update={"r": float(value)})
        return config.model_copy(update={"weight": weight})

    if not isinstance(config.traits, TwoPointTraitSpec):
        raise ConfigurationError(f"a {parameter} sweep needs a two_point_conditional trait record")
    if parameter == "cv":
        update = {"cv_x": float(value), "cv_y": float(value)}
    else:
        update = {parameter: float(value)}
    traits = config.traits.model_copy(update=update)
    return config.model_copy(update={"traits": traits})


def laws_from_config(config: ExperimentConfig, value: float) -> ModelLaws:
    """
    Degree, weight and trait laws at one grid point.

    Raises:
        DomainError: If a law is infeasible at this value
        ConfigurationError: If the kernel misses a support degree
    """
    point = apply_sweep_value(config, value)
    degree = degree_from_spec(point.degree)
    kernel = weight_from_spec(point.weight, degree)
    kernel.validate_against(degree)
    traits = traits_from_spec(point.traits)
    return ModelLaws(degree=degree, kernel=kernel, traits=traits)
