"""Built-in experiment presets."""

import numpy as np

from common.experiment_config import (
    ConstantDegreeSpec,
    ConstantTraitSpec,
    ConstantWeightSpec,
    ExperimentConfig,
    NegBinomialWeightSpec,
    RunMode,
    SweepSpec,
    TruncatedPoissonSpec,
    TwoPointConditionalWeightSpec,
    TwoPointTraitSpec,
)
from distributions.builders import max_feasible_cv

GRID_POINTS = 21


def cv_grid(mu: float, points: int = GRID_POINTS) -> list[float]:
    """Evenly spaced CVs from 0 to the largest feasible two-point CV."""
    return [round(float(v), 12) for v in np.linspace(0.0, max_feasible_cv(mu), points)]


def get_fig1_config() -> ExperimentConfig:
    """
    Unweighted 5-regular network, correlated two-point traits.

    Returns:
        ExperimentConfig sweeping CV_X = CV_Y at μ = 0.2, ρ = 0.7
    """
    return ExperimentConfig(
        id="fig1",
        description="R0 against trait heterogeneity on an unweighted 5-regular network",
        degree=ConstantDegreeSpec(value=5),
        weight=ConstantWeightSpec(value=1),
        traits=TwoPointTraitSpec(mu_x=0.2, mu_y=0.2, rho=0.7),
        sweep=SweepSpec(parameter="cv", values=cv_grid(0.2)),
        quantities=["r0"],
        mode=RunMode.ANALYTIC,
    )


def get_fig2_config() -> ExperimentConfig:
    """
    5-regular network with negative binomial weights of mean 10 and
    X ≡ Y ≡ √0.5; the shape r runs from 1 to 10.
    """
    return ExperimentConfig(
        id="fig2",
        description="R0 against weight heterogeneity with negative binomial weights",
        degree=ConstantDegreeSpec(value=5),
        weight=NegBinomialWeightSpec(r=1, mu_w=10),
        traits=ConstantTraitSpec(x=float(np.sqrt(0.5)), y=float(np.sqrt(0.5))),
        sweep=SweepSpec(parameter="r", values=[float(r) for r in range(1, 11)]),
        quantities=["r0", "r0_closed_form"],
        mode=RunMode.ANALYTIC,
    )


def _example_traits(**overrides) -> TwoPointTraitSpec:
    fields = dict(mu_x=0.5, mu_y=0.5, rho=0.8)
    fields.update(overrides)
    return TwoPointTraitSpec(**fields)


def get_fig3_config() -> ExperimentConfig:
    """Weights {1, 10} with q(1|d) = 1 - d⁻²: high-degree nodes get light edges."""
    return ExperimentConfig(
        id="fig3",
        description="Degree and weight negatively correlated",
        degree=TruncatedPoissonSpec(lam=4, dmax=15),
        weight=TwoPointConditionalWeightSpec(low=1, high=10, a=1.0, b=-1.0, exponent=-2.0),
        traits=_example_traits(),
        sweep=SweepSpec(parameter="cv", values=cv_grid(0.5)),
        quantities=["r0"],
        mode=RunMode.ANALYTIC,
    )


def get_fig4_config() -> ExperimentConfig:
    """Weights {1, 10} with equal mass at every degree; CV_Y fixed at 0.3."""
    return ExperimentConfig(
        id="fig4",
        description="Degree and weight independent, infectivity CV fixed",
        degree=TruncatedPoissonSpec(lam=4, dmax=15),
        weight=TwoPointConditionalWeightSpec(low=1, high=10, a=0.5, b=0.0, exponent=-2.0),
        traits=_example_traits(cv_y=0.3),
        sweep=SweepSpec(parameter="cv_x", values=cv_grid(0.5)),
        quantities=["r0"],
        mode=RunMode.ANALYTIC,
    )


def get_fig5_config() -> ExperimentConfig:
    """Weights {1, 10} with q(1|d) = d⁻²: high-degree nodes get heavy edges."""
    return ExperimentConfig(
        id="fig5",
        description="Degree and weight positively correlated",
        degree=TruncatedPoissonSpec(lam=4, dmax=15),
        weight=TwoPointConditionalWeightSpec(low=1, high=10, a=0.0, b=1.0, exponent=-2.0),
        traits=_example_traits(),
        sweep=SweepSpec(parameter="cv", values=cv_grid(0.5)),
        quantities=["r0"],
        mode=RunMode.ANALYTIC,
    )


def get_fig6_config() -> ExperimentConfig:
    """
    Symmetric two-type model: D ≡ 5, unit weights, X = Y ∈ {μ ± μ·CV}
    with μ = 0.48. Analytic R0 and π alongside simulated π and τ.
    """
    return ExperimentConfig(
        id="fig6",
        description="Outbreak probability and R0 for symmetric two-type traits",
        degree=ConstantDegreeSpec(value=5),
        weight=ConstantWeightSpec(value=1),
        traits=TwoPointTraitSpec(mu_x=0.48, mu_y=0.48, rho=1.0),
        sweep=SweepSpec(parameter="cv", values=cv_grid(0.48)),
        quantities=["r0", "pi_analytic"],
        mode=RunMode.BOTH,
        n=20_000,
        replicates=500,
    )


FIG1_CONFIG = get_fig1_config()
FIG2_CONFIG = get_fig2_config()
FIG3_CONFIG = get_fig3_config()
FIG4_CONFIG = get_fig4_config()
FIG5_CONFIG = get_fig5_config()
FIG6_CONFIG = get_fig6_config()

PRESETS: dict[str, ExperimentConfig] = {
    config.id: config
    for config in (FIG1_CONFIG, FIG2_CONFIG, FIG3_CONFIG, FIG4_CONFIG, FIG5_CONFIG, FIG6_CONFIG)
}


def presets() -> list[ExperimentConfig]:
    """All built-in experiment configs, in id order."""
    return [PRESETS[key] for key in sorted(PRESETS)]


def get_preset(preset_id: str) -> ExperimentConfig:
    """
    Look up a preset by id.

    Raises:
        KeyError: If no preset has this id
    """
    try:
        return PRESETS[preset_id]
    except KeyError:
        raise KeyError(f"unknown preset '{preset_id}' (choose from {', '.join(sorted(PRESETS))})") from None
