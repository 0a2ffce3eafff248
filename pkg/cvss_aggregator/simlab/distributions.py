"""
Score Distributions

Samplers for the five synthetic CVSS datasets. Every sampler draws from a
numpy Generator, truncates to [0, 10] and rounds to one decimal.

    centered    normal(mean=5, sd=1.5)
    high_heavy  10 * beta(a=5, b=1.5)
    low_heavy   10 * beta(a=1.5, b=5)
    bimodal     equal mixture of normal(2, 1) and normal(8.5, 1)
    uniform     uniform(0, 10)
"""

from enum import Enum
from typing import Callable

import numpy as np

MAX_SCORE = 10.0


class DistributionShape(Enum):
    CENTERED = "centered"
    HIGH_HEAVY = "high_heavy"
    LOW_HEAVY = "low_heavy"
    BIMODAL = "bimodal"
    UNIFORM = "uniform"


Sampler = Callable[[np.random.Generator, int], np.ndarray]


def _centered(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.normal(5.0, 1.5, size)


def _high_heavy(rng: np.random.Generator, size: int) -> np.ndarray:
    return MAX_SCORE * rng.beta(5.0, 1.5, size)


def _low_heavy(rng: np.random.Generator, size: int) -> np.ndarray:
    return MAX_SCORE * rng.beta(1.5, 5.0, size)


def _bimodal(rng: np.random.Generator, size: int) -> np.ndarray:
    high = rng.random(size) < 0.5
    return np.where(high, rng.normal(8.5, 1.0, size), rng.normal(2.0, 1.0, size))


def _uniform(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.uniform(0.0, MAX_SCORE, size)


SAMPLERS: dict[DistributionShape, Sampler] = {
    DistributionShape.CENTERED: _centered,
    DistributionShape.HIGH_HEAVY: _high_heavy,
    DistributionShape.LOW_HEAVY: _low_heavy,
    DistributionShape.BIMODAL: _bimodal,
    DistributionShape.UNIFORM: _uniform,
}


def sample_scores(
    shape: DistributionShape, rng: np.random.Generator, size: int
) -> list[float]:
    """Draw `size` one-decimal scores in [0, 10] with the given shape."""
    raw = SAMPLERS[shape](rng, size)
    return [round(float(score), 1) for score in np.clip(raw, 0.0, MAX_SCORE)]
