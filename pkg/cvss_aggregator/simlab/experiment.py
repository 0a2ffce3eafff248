"""
Simulation Experiment

Randomized datasets with random correction factors, generated in this
order from a single seeded generator:

1. scores from the configured distribution shape
2. maximum distance from the entry point L in [2, 20]
3. per score, a depth in [1, L] and beta by linear interpolation
4. functionality factor rho in {0, 1}
5. context factor gamma in {0, 1}
6. exploit factor mu in {0, 1.25, 1.5, 1.75, 2}

Each run compares the arithmetic and harmonic means of the scores, their
uncorrected Bayesian sum and the corrected Gamma under both averages.
"""

import csv
import io
import json
import logging
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from cvss_aggregator.aggregation import (
    AggregationEntry,
    AggregationInput,
    AggregationResult,
    aggregate,
    bayesian_sum,
)
from cvss_aggregator.factors import (
    AverageKind,
    CorrectionFactors,
    average_factor,
    corrected_score,
    linear_deepness,
)
from cvss_aggregator.models import ConfigError
from cvss_aggregator.simlab.distributions import MAX_SCORE, DistributionShape, sample_scores

logger = logging.getLogger(__name__)


MAX_DEPTH_RANGE = (2, 20)
MU_CHOICES = (0.0, 1.25, 1.5, 1.75, 2.0)

CSV_COLUMNS = ["distribution", "mean_arith", "mean_harm", "magerit", "bayes_arith", "bayes_harm"]
OUTPUT_FORMATS = ("csv", "json")


@dataclass(frozen=True)
class SimConfig:
    """
    One experiment run. The seed fully determines the output.

    lambda_override forces every summarized factor to the given value
    while the individual factors are still drawn.
    score_floor raises every drawn score below it to the floor.
    """
    dataset_size: int = 64
    distribution_shape: DistributionShape = DistributionShape.CENTERED
    seed: int = 0
    sigma_kind: AverageKind = AverageKind.ARITHMETIC
    lambda_override: float | None = None
    score_floor: float = 0.0

    def __post_init__(self):
        if self.dataset_size < 1:
            raise ConfigError(f"dataset_size must be >= 1, got {self.dataset_size}")
        if self.seed < 0:
            raise ConfigError(f"seed must be non-negative, got {self.seed}")
        if self.lambda_override is not None and self.lambda_override < 0:
            raise ConfigError(f"lambda_override must be >= 0, got {self.lambda_override}")
        if not 0.0 <= self.score_floor <= MAX_SCORE:
            raise ConfigError(f"score_floor must be within [0, 10], got {self.score_floor}")


@dataclass(frozen=True)
class SimDataset:
    max_depth: int
    samples: tuple[tuple[float, CorrectionFactors], ...]

    @property
    def scores(self) -> list[float]:
        return [score for score, _ in self.samples]


@dataclass(frozen=True)
class SimResult:
    """Summary values of one dataset; all in [0, 10]."""
    distribution: str
    seed: int
    dataset_size: int
    sigma_kind: AverageKind
    mean_arith: float
    mean_harm: float
    magerit: float
    bayes_arith: float
    bayes_harm: float
    degenerate: bool

    @property
    def gamma(self) -> float:
        """Corrected Gamma under the configured sigma kind."""
        if self.sigma_kind is AverageKind.HARMONIC:
            return self.bayes_harm
        return self.bayes_arith

    def to_row(self) -> dict[str, str]:
        return {
            "distribution": self.distribution,
            "mean_arith": f"{self.mean_arith:.4f}",
            "mean_harm": f"{self.mean_harm:.4f}",
            "magerit": f"{self.magerit:.4f}",
            "bayes_arith": f"{self.bayes_arith:.4f}",
            "bayes_harm": f"{self.bayes_harm:.4f}",
        }


def generate_dataset(cfg: SimConfig) -> SimDataset:
    """
    Draw scores and correction factors for one dataset.

    Example:
        dataset = generate_dataset(SimConfig(seed=7))
        len(dataset.samples)  # 64
    """
    rng = np.random.default_rng(cfg.seed)
    size = cfg.dataset_size

    scores = [max(s, cfg.score_floor) for s in sample_scores(cfg.distribution_shape, rng, size)]
    max_depth = int(rng.integers(MAX_DEPTH_RANGE[0], MAX_DEPTH_RANGE[1], endpoint=True))
    depths = rng.integers(1, max_depth, size, endpoint=True)
    rhos = rng.integers(0, 1, size, endpoint=True)
    gammas = rng.integers(0, 1, size, endpoint=True)
    mus = rng.choice(MU_CHOICES, size)

    samples = tuple(
        (
            score,
            CorrectionFactors(
                rho=int(rho),
                beta=linear_deepness(int(depth), max_depth),
                gamma=int(gamma),
                mu=float(mu),
            ),
        )
        for score, depth, rho, gamma, mu in zip(scores, depths, rhos, gammas, mus)
    )
    logger.debug(
        f"Generated {cfg.distribution_shape.value} dataset: size={size} "
        f"seed={cfg.seed} L={max_depth}"
    )
    return SimDataset(max_depth=max_depth, samples=samples)


def _corrected_entries(
    dataset: SimDataset, lambda_override: float | None
) -> tuple[AggregationEntry, ...]:
    entries = []
    for index, (score, factors) in enumerate(dataset.samples):
        lambda_ = factors.lambda_ if lambda_override is None else lambda_override
        corrected = corrected_score(score, lambda_)
        entries.append(AggregationEntry(
            vulnerability_id=f"S{index:04d}",
            raw=score,
            lambda_=lambda_,
            corrected=corrected.corrected,
            clamped=corrected.clamped,
        ))
    return tuple(entries)


def run_experiment(cfg: SimConfig) -> SimResult:
    """Generate one dataset and compute every summary value."""
    dataset = generate_dataset(cfg)
    scores = dataset.scores
    entries = _corrected_entries(dataset, cfg.lambda_override)

    arith = average_factor(scores, AverageKind.ARITHMETIC)
    harm = average_factor(scores, AverageKind.HARMONIC)
    by_arith: AggregationResult = aggregate(AggregationInput(entries=entries, sigma=arith))
    by_harm: AggregationResult = aggregate(AggregationInput(entries=entries, sigma=harm))

    result = SimResult(
        distribution=cfg.distribution_shape.value,
        seed=cfg.seed,
        dataset_size=cfg.dataset_size,
        sigma_kind=cfg.sigma_kind,
        mean_arith=arith.sigma,
        mean_harm=harm.sigma,
        magerit=bayesian_sum(scores),
        bayes_arith=by_arith.gamma_score,
        bayes_harm=by_harm.gamma_score,
        degenerate=by_arith.degenerate,
    )
    logger.info(
        f"Experiment {result.distribution} seed={cfg.seed}: "
        f"magerit={result.magerit:.4f} gamma={result.gamma:.4f}"
    )
    return result


def run_all_shapes(
    size: int = 64,
    seed: int = 0,
    sigma_kind: AverageKind = AverageKind.ARITHMETIC,
    lambda_override: float | None = None,
) -> list[SimResult]:
    """
    One experiment per distribution shape, all with the same seed.

    Each row equals the single-shape run with the same seed, so a row can
    be reproduced on its own.
    """
    return [
        run_experiment(SimConfig(
            dataset_size=size,
            distribution_shape=shape,
            seed=seed,
            sigma_kind=sigma_kind,
            lambda_override=lambda_override,
        ))
        for shape in DistributionShape
    ]


def format_results(results: Iterable[SimResult], fmt: str = "csv") -> str:
    """
    Render results as CSV (the comparison table columns) or JSON.

    Raises:
        ValueError: unknown format
    """
    results = list(results)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for result in results:
            writer.writerow(result.to_row())
        return buffer.getvalue()
    if fmt == "json":
        rows = [
            {
                "distribution": r.distribution,
                "seed": r.seed,
                "dataset_size": r.dataset_size,
                "sigma_kind": r.sigma_kind.value,
                "mean_arith": r.mean_arith,
                "mean_harm": r.mean_harm,
                "magerit": r.magerit,
                "bayes_arith": r.bayes_arith,
                "bayes_harm": r.bayes_harm,
                "gamma": r.gamma,
                "degenerate": r.degenerate,
            }
            for r in results
        ]
        return json.dumps(rows, indent=2) + "\n"
    raise ValueError(f"unknown output format {fmt!r}, expected one of {OUTPUT_FORMATS}")
