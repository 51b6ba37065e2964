"""Experiment configuration models for the weighted-network epidemic runner."""

import json
from enum import Enum
from pathlib import Path
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

# ==============================================================================
# Distribution records (tagged by `kind`)
# ==============================================================================


class _Record(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class ConstantDegreeSpec(_Record):
    kind: Literal["constant"] = "constant"
    value: int = Field(ge=0)
    """Degree of every node"""


class TruncatedPoissonSpec(_Record):
    kind: Literal["truncated_poisson"] = "truncated_poisson"
    lam: float = Field(gt=0)
    """Pre-truncation Poisson parameter"""
    dmax: int = Field(ge=0)
    """Largest degree kept"""


class ExplicitDegreeSpec(_Record):
    kind: Literal["explicit_pmf"] = "explicit_pmf"
    pmf: dict[int, float] = Field(min_length=1)
    """Degree -> weight (normalised on load)"""


DegreeSpec = Annotated[
    Union[ConstantDegreeSpec, TruncatedPoissonSpec, ExplicitDegreeSpec],
    Field(discriminator="kind"),
]


class ConstantWeightSpec(_Record):
    kind: Literal["constant"] = "constant"
    value: int = Field(default=1, ge=1)
    """Weight of every edge (1 = unweighted network)"""


class TwoPointConditionalWeightSpec(_Record):
    """Weights {low, high} with q(low|d) = a + b·d^exponent."""

    kind: Literal["two_point_conditional"] = "two_point_conditional"
    low: int = Field(default=1, ge=1)
    high: int = Field(default=10, ge=1)
    a: float = 0.5
    b: float = 0.0
    exponent: float = -2.0


class NegBinomialWeightSpec(_Record):
    kind: Literal["neg_binomial"] = "neg_binomial"
    r: float = Field(gt=0)
    """Shape; must be a positive integer for the weight pmf"""
    mu_w: float = Field(gt=0)
    """Mean weight"""
    mass_tol: float = Field(default=1e-12, gt=0, lt=1)
    """Tail mass discarded by truncation"""


class ExplicitWeightSpec(_Record):
    kind: Literal["explicit_pmf"] = "explicit_pmf"
    pmf: dict[int, float] = Field(min_length=1)
    """Weight -> weight (normalised on load), independent of degree"""


WeightSpec = Annotated[
    Union[
        ConstantWeightSpec,
        TwoPointConditionalWeightSpec,
        NegBinomialWeightSpec,
        ExplicitWeightSpec,
    ],
    Field(discriminator="kind"),
]


class ConstantTraitSpec(_Record):
    kind: Literal["constant"] = "constant"
    x: float = Field(ge=0, le=1)
    y: float = Field(ge=0, le=1)


class TwoPointTraitSpec(_Record):
    """Equal-proportion high/low atoms around (mu_x, mu_y)."""

    kind: Literal["two_point_conditional"] = "two_point_conditional"
    mu_x: float = Field(gt=0, lt=1)
    mu_y: float = Field(gt=0, lt=1)
    cv_x: float = Field(default=0.0, ge=0)
    cv_y: float = Field(default=0.0, ge=0)
    rho: float = Field(default=0.0, ge=-1, le=1)


class ExplicitTraitSpec(_Record):
    kind: Literal["explicit_pmf"] = "explicit_pmf"
    atoms: list[tuple[float, float, float]] = Field(min_length=1)
    """(x, y, weight) triples"""


TraitSpec = Annotated[
    Union[ConstantTraitSpec, TwoPointTraitSpec, ExplicitTraitSpec],
    Field(discriminator="kind"),
]

# ==============================================================================
# Experiment
# ==============================================================================


class RunMode(str, Enum):
    ANALYTIC = "analytic"
    SIMULATE = "simulate"
    BOTH = "both"

    @property
    def analytic(self) -> bool:
        return self in (RunMode.ANALYTIC, RunMode.BOTH)

    @property
    def simulate(self) -> bool:
        return self in (RunMode.SIMULATE, RunMode.BOTH)


SweepParameter = Literal["cv", "cv_x", "cv_y", "rho", "r"]
AnalyticQuantity = Literal["r0", "r0_closed_form", "pi_analytic"]
SIMULATED_COLUMNS = ("pi_hat", "tau_hat")


class SweepSpec(_Record):
    parameter: SweepParameter
    """Which parameter varies: cv (CV_X = CV_Y), cv_x, cv_y, rho, or r (neg. binomial shape)"""
    values: list[float] = Field(min_length=1)
    """Grid points, in output order"""


class ExperimentConfig(BaseModel):
    """
    Configuration for one experiment (one CSV).

    This configuration defines:
    - The network (degree law, weight kernel)
    - The trait law and the parameter swept over
    - What is computed (analytic quantities, simulation)
    - Simulation size, seed and output location
    """

    model_config = ConfigDict(extra="forbid")

    # Identity
    id: str = Field(min_length=1, pattern=r"^[A-Za-z0-9_.-]+$")
    """Experiment id, also the output file stem"""

    description: str = ""
    """Free-text description"""

    # Model
    degree: DegreeSpec
    weight: WeightSpec = ConstantWeightSpec()
    traits: TraitSpec
    sweep: SweepSpec

    # Outputs
    quantities: list[AnalyticQuantity] = Field(default_factory=lambda: ["r0"], min_length=1)
    """Analytic columns written after the sweep column(s)"""

    mode: RunMode = RunMode.ANALYTIC
    """analytic | simulate | both"""

    # Simulation
    n: int = Field(default=10_000, ge=1)
    """Population size per replicate"""

    replicates: int = Field(default=200, ge=1)
    """Replicates per grid point"""

    seed: int = Field(default=20240601, ge=0)
    """Master seed"""

    threshold_minimum: int = Field(default=50, ge=1)
    threshold_fraction: float = Field(default=0.01, gt=0, le=1)
    """Major outbreak iff final size >= max(threshold_minimum, threshold_fraction·n)"""

    # Infrastructure
    output: Path = Path("results")
    """Output directory"""

    workers: int = Field(default=1, ge=1)
    """Worker processes"""

    def columns(self) -> tuple[str, ...]:
        """CSV column order for this config."""
        cols = [self.sweep.parameter]
        if self.sweep.parameter == "r":
            cols.append("cv_w")
        if self.mode.analytic:
            cols.extend(self.quantities)
        if self.mode.simulate:
            cols.extend(SIMULATED_COLUMNS)
        return tuple(cols)

    def to_dict(self) -> dict:
        """Convert config to a JSON-compatible dictionary."""
        return self.model_dump(mode="json")

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        """Create config from dictionary (raises pydantic.ValidationError)."""
        return cls.model_validate(data)

    @classmethod
    def from_json_file(cls, path: Path) -> "ExperimentConfig":
        """Load config from a JSON file (raises pydantic.ValidationError)."""
        return cls.from_dict(json.loads(Path(path).read_text()))

    def with_overrides(self, **overrides) -> "ExperimentConfig":
        """Copy with non-None overrides applied and re-validated."""
        data = self.to_dict()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return type(self).from_dict(data)
