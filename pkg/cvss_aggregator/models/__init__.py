"""
Models Module
Error codes, exceptions and validation results.
"""

from .errors import (
    # Enums
    ErrorCode,

    # Validation
    ValidationIssue,
    ValidationResult,

    # Exceptions
    AggregatorError,
    VectorError,
    MalformedVector,
    MissingMetric,
    DuplicateMetric,
    UnsupportedMetricGroup,
    ValidationErrors,
    ScoreMismatch,
    DepthOutOfRange,
    EmptyDataset,
    ParseError,
    UnknownVector,
    ConfigError,

    # Helpers
    score_mismatch_issue,
)

__all__ = [
    # Enums
    "ErrorCode",

    # Validation
    "ValidationIssue",
    "ValidationResult",

    # Exceptions
    "AggregatorError",
    "VectorError",
    "MalformedVector",
    "MissingMetric",
    "DuplicateMetric",
    "UnsupportedMetricGroup",
    "ValidationErrors",
    "ScoreMismatch",
    "DepthOutOfRange",
    "EmptyDataset",
    "ParseError",
    "UnknownVector",
    "ConfigError",

    # Helpers
    "score_mismatch_issue",
]
