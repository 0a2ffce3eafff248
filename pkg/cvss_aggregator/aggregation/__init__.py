"""
Aggregation Module

Bayesian sum, final aggregation, contribution analysis and the
end-to-end assessment pipeline.
"""

from .bayes import bayesian_sum, bayesian_trace
from .aggregator import (
    AggregationEntry,
    AggregationInput,
    AggregationResult,
    Contribution,
    ContributionAnalysis,
    aggregate,
    contributions,
)
from .pipeline import FactorRow, Assessment, assess, to_entries

__all__ = [
    # Bayesian sum
    "bayesian_sum",
    "bayesian_trace",
    # Aggregation
    "AggregationEntry",
    "AggregationInput",
    "AggregationResult",
    "Contribution",
    "ContributionAnalysis",
    "aggregate",
    "contributions",
    # Pipeline
    "FactorRow",
    "Assessment",
    "assess",
    "to_entries",
]
