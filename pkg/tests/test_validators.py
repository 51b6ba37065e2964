import json

import pytest

from common import validators
from common.errors import ConfigValidationError
from common.experiment_config import ExperimentConfig
from expcli.config import get_fig1_config, get_fig2_config


# ==============================================================================
# Fixtures
# ==============================================================================


@pytest.fixture
def valid_config_data():
    """Fixture providing a valid experiment config dictionary."""
    return get_fig1_config().to_dict()


@pytest.fixture
def negbin_config_data():
    """Fixture providing a valid r-sweep config dictionary."""
    return get_fig2_config().to_dict()


# ==============================================================================
# Tests for validate_experiment_config: schema
# ==============================================================================


class TestValidateSchema:
    def test_valid_config(self, valid_config_data):
        """A valid experiment config should produce no validation errors."""
        errors = validators.validate_experiment_config(valid_config_data)
        assert not errors

    @pytest.mark.parametrize('missing_field', ['id', 'degree', 'traits', 'sweep'])
    def test_missing_required_field(self, valid_config_data, missing_field):
        """A missing required field should be detected."""
        config_data = valid_config_data.copy()
        del config_data[missing_field]
        errors = validators.validate_experiment_config(config_data)
        assert f"{missing_field}: Field required" in errors

    def test_unknown_field(self, valid_config_data):
        """Unknown top-level keys are rejected."""
        config_data = valid_config_data.copy()
        config_data['colour'] = 'blue'
        errors = validators.validate_experiment_config(config_data)
        assert any(e.startswith('colour:') for e in errors)

    def test_unknown_kind(self, valid_config_data):
        """A distribution record with an unknown kind should be detected."""
        config_data = valid_config_data.copy()
        config_data['degree'] = {'kind': 'power_law', 'value': 5}
        errors = validators.validate_experiment_config(config_data)
        assert len(errors) == 1
        assert errors[0].startswith('degree')

    @pytest.mark.parametrize(
        'field, value',
        [('n', 0), ('replicates', 0), ('seed', -1), ('workers', 0), ('threshold_fraction', 0)],
    )
    def test_out_of_range_number(self, valid_config_data, field, value):
        config_data = valid_config_data.copy()
        config_data[field] = value
        errors = validators.validate_experiment_config(config_data)
        assert any(e.startswith(f'{field}:') for e in errors)

    @pytest.mark.parametrize('bad_id', ['', 'has space', 'slash/id'])
    def test_invalid_id(self, valid_config_data, bad_id):
        config_data = valid_config_data.copy()
        config_data['id'] = bad_id
        errors = validators.validate_experiment_config(config_data)
        assert any(e.startswith('id:') for e in errors)

    def test_empty_sweep(self, valid_config_data):
        config_data = valid_config_data.copy()
        config_data['sweep'] = {'parameter': 'cv', 'values': []}
        errors = validators.validate_experiment_config(config_data)
        assert any(e.startswith('sweep.values:') for e in errors)

    def test_unknown_quantity(self, valid_config_data):
        config_data = valid_config_data.copy()
        config_data['quantities'] = ['r0', 'final_size']
        errors = validators.validate_experiment_config(config_data)
        assert any(e.startswith('quantities.1:') for e in errors)

    def test_nested_location(self, valid_config_data):
        """Errors inside records carry the dotted path."""
        config_data = valid_config_data.copy()
        config_data['traits'] = dict(config_data['traits'], rho=2.0)
        errors = validators.validate_experiment_config(config_data)
        assert any(e.startswith('traits.two_point_conditional.rho:') for e in errors)


# ==============================================================================
# Tests for validate_experiment_config: cross-field rules
# ==============================================================================


class TestValidateSemantics:
    def test_infeasible_cv_values(self, valid_config_data):
        """CV values that push an atom outside [0,1] are listed per trait."""
        config_data = valid_config_data.copy()
        config_data['sweep'] = {'parameter': 'cv', 'values': [0.0, 1.5]}
        errors = validators.validate_experiment_config(config_data)
        assert (
            "traits.cv_x: values [1.5] put an atom outside [0,1] (feasible range 0..1)."
            in errors
        )
        assert (
            "traits.cv_y: values [1.5] put an atom outside [0,1] (feasible range 0..1)."
            in errors
        )

    def test_fixed_cv_checked(self, valid_config_data):
        config_data = valid_config_data.copy()
        config_data['traits'] = dict(config_data['traits'], mu_y=0.8, cv_y=0.5)
        config_data['sweep'] = {'parameter': 'cv_x', 'values': [0.0, 0.5]}
        errors = validators.validate_experiment_config(config_data)
        assert errors == [
            "traits.cv_y: values [0.5] put an atom outside [0,1] (feasible range 0..0.25)."
        ]

    def test_trait_sweep_needs_two_point_traits(self, negbin_config_data):
        config_data = negbin_config_data.copy()
        config_data['sweep'] = {'parameter': 'cv', 'values': [0.0]}
        errors = validators.validate_experiment_config(config_data)
        assert "sweep.parameter: 'cv' requires traits.kind 'two_point_conditional'." in errors

    def test_r_sweep_needs_negbin(self, valid_config_data):
        config_data = valid_config_data.copy()
        config_data['sweep'] = {'parameter': 'r', 'values': [1, 2]}
        errors = validators.validate_experiment_config(config_data)
        assert "sweep.parameter: 'r' requires weight.kind 'neg_binomial'." in errors

    def test_r_must_be_integer(self, negbin_config_data):
        config_data = negbin_config_data.copy()
        config_data['sweep'] = {'parameter': 'r', 'values': [1, 2.5]}
        errors = validators.validate_experiment_config(config_data)
        assert errors == ["weight.r: 2.5 is not a positive integer."]

    def test_r_bounded_by_mean(self, negbin_config_data):
        config_data = negbin_config_data.copy()
        config_data['sweep'] = {'parameter': 'r', 'values': [11]}
        errors = validators.validate_experiment_config(config_data)
        assert errors == ["weight.r: 11.0 exceeds weight.mu_w=10.0."]

    def test_fixed_r_checked(self, valid_config_data):
        config_data = valid_config_data.copy()
        config_data['weight'] = {'kind': 'neg_binomial', 'r': 1.5, 'mu_w': 10}
        errors = validators.validate_experiment_config(config_data)
        assert "weight.r: 1.5 is not a positive integer." in errors

    def test_rho_sweep_range(self, valid_config_data):
        config_data = valid_config_data.copy()
        config_data['sweep'] = {'parameter': 'rho', 'values': [0.5, 1.5]}
        errors = validators.validate_experiment_config(config_data)
        assert "sweep.values: correlations [1.5] lie outside [-1, 1]." in errors

    def test_two_point_weight_order(self, valid_config_data):
        config_data = valid_config_data.copy()
        config_data['weight'] = {'kind': 'two_point_conditional', 'low': 10, 'high': 1}
        errors = validators.validate_experiment_config(config_data)
        assert "weight.low: must be smaller than weight.high." in errors

    def test_duplicate_quantities(self, valid_config_data):
        config_data = valid_config_data.copy()
        config_data['quantities'] = ['r0', 'r0']
        errors = validators.validate_experiment_config(config_data)
        assert "quantities: entries must be unique." in errors

    def test_negative_degree_pmf(self, valid_config_data):
        config_data = valid_config_data.copy()
        config_data['degree'] = {'kind': 'explicit_pmf', 'pmf': {'3': 1.0, '5': -0.5}}
        errors = validators.validate_experiment_config(config_data)
        assert "degree.pmf: degrees and weights must be non-negative." in errors


# ==============================================================================
# Tests for validate_experiment_config: laws at every grid point
# ==============================================================================


class TestValidateLaws:
    @pytest.mark.parametrize(
        'field, record, message',
        [
            ('weight', {'kind': 'explicit_pmf', 'pmf': {'0': 1.0}}, "weight: weights must be >= 1, got 0"),
            (
                'weight',
                {'kind': 'two_point_conditional', 'low': 1, 'high': 10, 'a': 1.5, 'b': 0.0},
                "weight: q(1|5) = 1.5 lies outside [0,1]",
            ),
            ('degree', {'kind': 'explicit_pmf', 'pmf': {'3': 0.0}}, "degree: pmf has no positive mass"),
        ],
    )
    def test_unbuildable_record(self, valid_config_data, field, record, message):
        """Records that pass the schema but cannot be built are reported by field."""
        config_data = valid_config_data.copy()
        config_data[field] = record
        errors = validators.validate_experiment_config(config_data)
        assert errors == [message]

    def test_trait_atom_outside_unit_square(self, negbin_config_data):
        config_data = negbin_config_data.copy()
        config_data['traits'] = {'kind': 'explicit_pmf', 'atoms': [[1.5, 0.5, 1.0]]}
        errors = validators.validate_experiment_config(config_data)
        assert errors == ["traits: trait atom (1.5, 0.5) lies outside [0,1]²"]

    def test_one_message_per_field(self, valid_config_data):
        """A record broken at every grid point is reported once."""
        config_data = valid_config_data.copy()
        config_data['weight'] = {'kind': 'explicit_pmf', 'pmf': {'0': 1.0}}
        config_data['degree'] = {'kind': 'explicit_pmf', 'pmf': {'3': 0.0}}
        errors = validators.validate_experiment_config(config_data)
        assert len(config_data['sweep']['values']) > 1
        assert errors == ["degree: pmf has no positive mass"]

    def test_skipped_when_fields_already_invalid(self, valid_config_data):
        config_data = valid_config_data.copy()
        config_data['weight'] = {'kind': 'explicit_pmf', 'pmf': {'0': 1.0}}
        config_data['quantities'] = ['r0', 'r0']
        errors = validators.validate_experiment_config(config_data)
        assert errors == ["quantities: entries must be unique."]

    def test_ensure_valid_config_raises(self, valid_config_data):
        config_data = valid_config_data.copy()
        config_data['weight'] = {'kind': 'explicit_pmf', 'pmf': {'0': 1.0}}
        with pytest.raises(ConfigValidationError) as exc_info:
            validators.ensure_valid_config(config_data)
        assert exc_info.value.errors == ["weight: weights must be >= 1, got 0"]


# ==============================================================================
# Tests for ensure_valid_config
# ==============================================================================


class TestEnsureValidConfig:
    def test_from_dict(self, valid_config_data):
        config = validators.ensure_valid_config(valid_config_data)
        assert isinstance(config, ExperimentConfig)
        assert config.id == 'fig1'

    def test_from_model(self):
        config = validators.ensure_valid_config(get_fig2_config())
        assert config.sweep.parameter == 'r'

    def test_from_file(self, tmp_path, valid_config_data):
        path = tmp_path / "fig1.json"
        path.write_text(json.dumps(valid_config_data))
        assert validators.ensure_valid_config(path).id == 'fig1'
        assert validators.ensure_valid_config(str(path)).id == 'fig1'

    def test_collects_every_error(self, valid_config_data):
        config_data = valid_config_data.copy()
        config_data['sweep'] = {'parameter': 'cv', 'values': [2.0]}
        config_data['quantities'] = ['r0', 'r0']
        with pytest.raises(ConfigValidationError) as exc_info:
            validators.ensure_valid_config(config_data)
        assert len(exc_info.value.errors) == 3
        assert str(exc_info.value).startswith("Invalid experiment config:\n  - ")

    def test_unreadable_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ConfigValidationError) as exc_info:
            validators.ensure_valid_config(path)
        assert len(exc_info.value.errors) == 1
        assert exc_info.value.errors[0].startswith(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigValidationError):
            validators.ensure_valid_config(tmp_path / "absent.json")
