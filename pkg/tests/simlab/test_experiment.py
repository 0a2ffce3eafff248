"""Tests for the synthetic experiment harness."""

import csv
import io
import json

import numpy as np
import pytest

from cvss_aggregator.aggregation import bayesian_sum
from cvss_aggregator.factors import AverageKind, linear_deepness
from cvss_aggregator.models import ConfigError
from cvss_aggregator.simlab import (
    CSV_COLUMNS,
    MAX_DEPTH_RANGE,
    MU_CHOICES,
    DistributionShape,
    SimConfig,
    format_results,
    generate_dataset,
    run_all_shapes,
    run_experiment,
    sample_scores,
)

pytestmark = [pytest.mark.unit, pytest.mark.simlab]


class TestSimConfig:
    """Test SimConfig validation."""

    def test_defaults(self):
        cfg = SimConfig()
        assert cfg.dataset_size == 64
        assert cfg.distribution_shape is DistributionShape.CENTERED
        assert cfg.sigma_kind is AverageKind.ARITHMETIC

    @pytest.mark.parametrize("kwargs", [
        {"dataset_size": 0},
        {"dataset_size": -3},
        {"seed": -1},
        {"lambda_override": -0.5},
        {"score_floor": -0.1},
        {"score_floor": 10.5},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ConfigError):
            SimConfig(**kwargs)


class TestSampleScores:
    """Test the distribution samplers."""

    @pytest.mark.parametrize("shape", list(DistributionShape))
    def test_range_and_precision(self, shape):
        scores = sample_scores(shape, np.random.default_rng(3), 500)
        assert len(scores) == 500
        assert all(0.0 <= s <= 10.0 for s in scores)
        assert all(s == round(s, 1) for s in scores)

    def test_shapes_differ(self):
        def mean(shape):
            return float(np.mean(sample_scores(shape, np.random.default_rng(11), 2000)))

        assert mean(DistributionShape.HIGH_HEAVY) > 6.5
        assert mean(DistributionShape.LOW_HEAVY) < 3.5
        assert 4.5 < mean(DistributionShape.CENTERED) < 5.5


class TestGenerateDataset:
    """Test generate_dataset."""

    def test_deterministic(self):
        cfg = SimConfig(seed=42, distribution_shape=DistributionShape.BIMODAL)
        assert generate_dataset(cfg) == generate_dataset(cfg)

    def test_seed_matters(self):
        assert generate_dataset(SimConfig(seed=1)) != generate_dataset(SimConfig(seed=2))

    @pytest.mark.parametrize("seed", range(20))
    def test_factor_domains(self, seed):
        dataset = generate_dataset(SimConfig(seed=seed, dataset_size=32))
        low, high = MAX_DEPTH_RANGE
        assert low <= dataset.max_depth <= high
        grid = {linear_deepness(d, dataset.max_depth) for d in range(1, dataset.max_depth + 1)}
        assert len(dataset.samples) == 32
        for _, factors in dataset.samples:
            assert factors.beta in grid
            assert factors.rho in (0, 1)
            assert factors.gamma in (0, 1)
            assert factors.mu in MU_CHOICES
            assert factors.lambda_ == factors.rho * factors.beta * factors.gamma * factors.mu


class TestRunExperiment:
    """Test run_experiment."""

    def test_deterministic(self):
        cfg = SimConfig(seed=5, distribution_shape=DistributionShape.UNIFORM)
        assert run_experiment(cfg) == run_experiment(cfg)

    @pytest.mark.parametrize("shape", list(DistributionShape))
    def test_values_in_range(self, shape):
        result = run_experiment(SimConfig(seed=9, distribution_shape=shape))
        for value in (result.mean_arith, result.mean_harm, result.magerit,
                      result.bayes_arith, result.bayes_harm):
            assert 0.0 <= value <= 10.0
        assert result.mean_harm <= result.mean_arith + 1e-9

    def test_zero_lambda_is_degenerate(self):
        result = run_experiment(SimConfig(seed=3, lambda_override=0.0))
        assert result.degenerate
        assert result.bayes_arith == 0.0
        assert result.bayes_harm == 0.0

    def test_unit_lambda_uses_raw_scores(self):
        cfg = SimConfig(seed=8, distribution_shape=DistributionShape.HIGH_HEAVY, lambda_override=1.0)
        result = run_experiment(cfg)
        f_value = bayesian_sum(generate_dataset(cfg).scores)
        assert result.bayes_arith == pytest.approx(max(10 - f_value / result.mean_arith, 0.0))

    def test_gamma_follows_sigma_kind(self):
        arith = run_experiment(SimConfig(seed=4))
        harm = run_experiment(SimConfig(seed=4, sigma_kind=AverageKind.HARMONIC))
        assert arith.gamma == arith.bayes_arith
        assert harm.gamma == harm.bayes_harm

    @pytest.mark.parametrize("seed", range(100))
    def test_uncorrected_sum_saturates(self, seed):
        """64 scores of at least 1 push the uncorrected sum above 9.99."""
        cfg = SimConfig(seed=seed, distribution_shape=DistributionShape.UNIFORM,
                        lambda_override=1.0, score_floor=1.0)
        assert min(generate_dataset(cfg).scores) >= 1.0
        assert run_experiment(cfg).magerit > 9.99

    def test_score_floor_keeps_the_draws(self):
        """Flooring raises low scores without changing the random stream."""
        plain = generate_dataset(SimConfig(seed=5, distribution_shape=DistributionShape.LOW_HEAVY))
        floored = generate_dataset(SimConfig(
            seed=5, distribution_shape=DistributionShape.LOW_HEAVY, score_floor=2.0,
        ))
        assert floored.scores == [max(s, 2.0) for s in plain.scores]
        assert [f for _, f in floored.samples] == [f for _, f in plain.samples]


class TestRunAllShapes:
    """Test run_all_shapes."""

    def test_one_row_per_shape(self):
        results = run_all_shapes(size=16, seed=2)
        assert [r.distribution for r in results] == [s.value for s in DistributionShape]

    def test_rows_reproducible_alone(self):
        results = run_all_shapes(size=16, seed=2)
        alone = run_experiment(SimConfig(
            dataset_size=16, distribution_shape=DistributionShape.BIMODAL, seed=2,
        ))
        assert results[3] == alone


class TestFormatResults:
    """Test format_results."""

    def test_csv(self):
        text = format_results(run_all_shapes(size=8, seed=1), "csv")
        rows = list(csv.DictReader(io.StringIO(text)))
        assert text.splitlines()[0] == ",".join(CSV_COLUMNS)
        assert len(rows) == 5
        assert all(len(row["magerit"].split(".")[1]) == 4 for row in rows)

    def test_json(self):
        payload = json.loads(format_results([run_experiment(SimConfig(seed=1))], "json"))
        assert payload[0]["distribution"] == "centered"
        assert payload[0]["gamma"] == payload[0]["bayes_arith"]
        assert payload[0]["sigma_kind"] == "arithmetic"

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            format_results([], "xml")
