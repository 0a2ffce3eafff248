"""
Simulation Lab

Seeded synthetic datasets comparing means, the uncorrected Bayesian sum
and the corrected aggregation.
"""

from .distributions import DistributionShape, sample_scores
from .experiment import (
    CSV_COLUMNS,
    MAX_DEPTH_RANGE,
    MU_CHOICES,
    SimConfig,
    SimDataset,
    SimResult,
    generate_dataset,
    run_experiment,
    run_all_shapes,
    format_results,
)

__all__ = [
    # Distributions
    "DistributionShape",
    "sample_scores",
    # Experiments
    "CSV_COLUMNS",
    "MAX_DEPTH_RANGE",
    "MU_CHOICES",
    "SimConfig",
    "SimDataset",
    "SimResult",
    "generate_dataset",
    "run_experiment",
    "run_all_shapes",
    "format_results",
]
