import json
from pathlib import Path
from typing import Any, Union

from pydantic import ValidationError

from distributions.spec import (
    apply_sweep_value,
    degree_from_spec,
    traits_from_spec,
    weight_from_spec,
)

from .errors import ConfigValidationError, ConfigurationError, DomainError
from .experiment_config import ExperimentConfig

_TRAIT_SWEEPS = frozenset(['cv', 'cv_x', 'cv_y', 'rho'])


def _format_loc(loc: tuple) -> str:
    return '.'.join(str(part) for part in loc) or '<root>'


def validate_experiment_config(data: dict[str, Any]) -> list[str]:
    """Validate an experiment config dictionary; an empty list means valid."""
    try:
        config = ExperimentConfig.from_dict(data)
    except ValidationError as exc:
        return [
            f"{_format_loc(err['loc'])}: {err['msg']}" for err in exc.errors()
        ]

    errors = _validate_semantics(config)
    if errors:
        return errors
    return _validate_laws(config)


def _validate_semantics(config: ExperimentConfig) -> list[str]:
    errors: list[str] = []
    sweep = config.sweep
    traits = config.traits
    weight = config.weight

    # Sweep parameter must target a spec that has it
    if sweep.parameter in _TRAIT_SWEEPS and traits.kind != 'two_point_conditional':
        errors.append(
            f"sweep.parameter: '{sweep.parameter}' requires traits.kind 'two_point_conditional'."
        )
    if sweep.parameter == 'r' and weight.kind != 'neg_binomial':
        errors.append("sweep.parameter: 'r' requires weight.kind 'neg_binomial'.")

    # Two-point trait atoms must stay inside [0,1] at every grid point
    if traits.kind == 'two_point_conditional':
        for label, mu, swept in (
            ('cv_x', traits.mu_x, sweep.parameter in ('cv', 'cv_x')),
            ('cv_y', traits.mu_y, sweep.parameter in ('cv', 'cv_y')),
        ):
            values = sweep.values if swept else [getattr(traits, label)]
            limit = min(1.0, (1.0 - mu) / mu)
            bad = [v for v in values if v < 0 or v > limit + 1e-12]
            if bad:
                errors.append(
                    f"traits.{label}: values {bad} put an atom outside [0,1] (feasible range 0..{limit:.6g})."
                )
        if sweep.parameter == 'rho':
            bad = [v for v in sweep.values if abs(v) > 1]
            if bad:
                errors.append(f"sweep.values: correlations {bad} lie outside [-1, 1].")

    # Negative binomial shape must be an integer not exceeding the mean
    if weight.kind == 'neg_binomial':
        shapes = sweep.values if sweep.parameter == 'r' else [weight.r]
        for r in shapes:
            if r != int(r) or r < 1:
                errors.append(f"weight.r: {r} is not a positive integer.")
            elif r > weight.mu_w:
                errors.append(f"weight.r: {r} exceeds weight.mu_w={weight.mu_w}.")

    if weight.kind == 'two_point_conditional' and weight.low >= weight.high:
        errors.append("weight.low: must be smaller than weight.high.")

    if len(set(config.quantities)) != len(config.quantities):
        errors.append("quantities: entries must be unique.")

    if config.degree.kind == 'explicit_pmf':
        if any(d < 0 for d in config.degree.pmf) or any(p < 0 for p in config.degree.pmf.values()):
            errors.append("degree.pmf: degrees and weights must be non-negative.")

    return errors


def _validate_laws(config: ExperimentConfig) -> list[str]:
    """Build every law at every grid point; report the first failure per field."""
    errors: dict[str, str] = {}
    for value in config.sweep.values:
        point = apply_sweep_value(config, value)
        degree = None
        try:
            degree = degree_from_spec(point.degree)
        except (DomainError, ConfigurationError) as exc:
            errors.setdefault('degree', f"degree: {exc}")
        if degree is not None:
            try:
                kernel = weight_from_spec(point.weight, degree)
                kernel.validate_against(degree)
            except (DomainError, ConfigurationError) as exc:
                errors.setdefault('weight', f"weight: {exc}")
        try:
            traits_from_spec(point.traits)
        except (DomainError, ConfigurationError) as exc:
            errors.setdefault('traits', f"traits: {exc}")
    return list(errors.values())


def ensure_valid_config(
    source: Union[ExperimentConfig, dict[str, Any], str, Path],
) -> ExperimentConfig:
    """
    Load and validate a config from a model, a dictionary or a JSON file path.

    Raises:
        ConfigValidationError: Listing every offending field
    """
    if isinstance(source, ExperimentConfig):
        data = source.to_dict()
    elif isinstance(source, dict):
        data = source
    else:
        path = Path(source)
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigValidationError([f"{path}: {exc}"]) from exc

    errors = validate_experiment_config(data)
    if errors:
        raise ConfigValidationError(errors)
    return ExperimentConfig.from_dict(data)
