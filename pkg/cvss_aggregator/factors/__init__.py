"""
Factors Module

Correction factors, corrected scores and the average factor.
"""

from .correction import (
    EXPLOIT_FACTORS,
    INTERPOLATIONS,
    AverageKind,
    DeploymentContext,
    CorrectionFactors,
    CorrectedScore,
    AverageFactor,
    Interpolation,
    linear_deepness,
    get_interpolation,
    functionality_factor,
    deepness_factor,
    context_factor,
    exploit_factor,
    summarized_factor,
    correction_factors,
    corrected_score,
    average_factor,
)

__all__ = [
    "EXPLOIT_FACTORS",
    "INTERPOLATIONS",
    "AverageKind",
    "DeploymentContext",
    "CorrectionFactors",
    "CorrectedScore",
    "AverageFactor",
    "Interpolation",
    "linear_deepness",
    "get_interpolation",
    "functionality_factor",
    "deepness_factor",
    "context_factor",
    "exploit_factor",
    "summarized_factor",
    "correction_factors",
    "corrected_score",
    "average_factor",
]
