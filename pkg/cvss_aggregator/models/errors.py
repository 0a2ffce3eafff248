"""
Error types
Error codes, exceptions and validation results shared by every module.
"""

from dataclasses import dataclass, field
from enum import Enum


class ErrorCode(Enum):
    """Failure kinds reported by the library and the CLI."""
    MALFORMED_VECTOR = "MALFORMED_VECTOR"
    MISSING_METRIC = "MISSING_METRIC"
    DUPLICATE_METRIC = "DUPLICATE_METRIC"
    UNSUPPORTED_METRIC_GROUP = "UNSUPPORTED_METRIC_GROUP"
    INVALID_VECTOR = "INVALID_VECTOR"
    UNKNOWN_ASSET = "UNKNOWN_ASSET"
    UNREACHABLE = "UNREACHABLE"
    DUPLICATE_ASSET = "DUPLICATE_ASSET"
    NO_ENTRY_POINT = "NO_ENTRY_POINT"
    SELF_LOOP = "SELF_LOOP"
    DEPTH_OUT_OF_RANGE = "DEPTH_OUT_OF_RANGE"
    EMPTY_DATASET = "EMPTY_DATASET"
    PARSE_ERROR = "PARSE_ERROR"
    SCHEMA_VIOLATION = "SCHEMA_VIOLATION"
    SCORE_MISMATCH = "SCORE_MISMATCH"
    UNKNOWN_VECTOR = "UNKNOWN_VECTOR"
    CONFIG_ERROR = "CONFIG_ERROR"


@dataclass(frozen=True)
class ValidationIssue:
    """One violation found while validating input."""
    code: ErrorCode
    subject: str
    message: str

    def __str__(self) -> str:
        return f"{self.code.value}: {self.message}"


@dataclass
class ValidationResult:
    """Outcome of a validation pass."""
    valid: bool
    errors: list[ValidationIssue] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


class AggregatorError(Exception):
    """Base class for every error raised by cvss_aggregator."""

    code: ErrorCode = ErrorCode.PARSE_ERROR

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


# ---------------------------------------------------------------------------
# Vector errors
# ---------------------------------------------------------------------------

class VectorError(AggregatorError, ValueError):
    """A CVSS vector string could not be decoded."""


class MalformedVector(VectorError):
    code = ErrorCode.MALFORMED_VECTOR

    def __init__(self, position: int, token: str):
        super().__init__(f"unparsable token {token!r} at position {position}")
        self.position = position
        self.token = token


class MissingMetric(VectorError):
    code = ErrorCode.MISSING_METRIC

    def __init__(self, name: str):
        super().__init__(f"missing base metric {name!r}")
        self.name = name


class DuplicateMetric(VectorError):
    code = ErrorCode.DUPLICATE_METRIC

    def __init__(self, name: str):
        super().__init__(f"metric {name!r} appears more than once")
        self.name = name


class UnsupportedMetricGroup(VectorError):
    """Temporal or environmental metric present in a base vector."""
    code = ErrorCode.UNSUPPORTED_METRIC_GROUP

    def __init__(self, name: str):
        super().__init__(
            f"metric {name!r} belongs to the temporal/environmental group, "
            "which is replaced by the context and exploit factors"
        )
        self.name = name


# ---------------------------------------------------------------------------
# Validation errors
# ---------------------------------------------------------------------------

class ValidationErrors(AggregatorError, ValueError):
    """Input violated one or more constraints; carries all of them."""
    code = ErrorCode.SCHEMA_VIOLATION

    def __init__(self, issues: list[ValidationIssue]):
        self.issues = list(issues)
        summary = "; ".join(str(issue) for issue in self.issues)
        super().__init__(f"{len(self.issues)} violation(s): {summary}")


class ScoreMismatch(ValidationErrors):
    """Stated base score disagrees with the score computed from the vector."""
    code = ErrorCode.SCORE_MISMATCH

    def __init__(self, cve: str, stated: float, computed: float,
                 issues: list[ValidationIssue] | None = None):
        self.cve = cve
        self.stated = stated
        self.computed = computed
        super().__init__(issues or [score_mismatch_issue(cve, stated, computed)])


def score_mismatch_issue(cve: str, stated: float, computed: float) -> ValidationIssue:
    return ValidationIssue(
        code=ErrorCode.SCORE_MISMATCH,
        subject=cve,
        message=f"{cve} states base score {stated} but its vector scores {computed}",
    )


class DepthOutOfRange(AggregatorError, ValueError):
    code = ErrorCode.DEPTH_OUT_OF_RANGE

    def __init__(self, depth: int, max_depth: int):
        super().__init__(f"depth {depth} outside [1, {max_depth}]")
        self.depth = depth
        self.max_depth = max_depth


class EmptyDataset(AggregatorError, ValueError):
    code = ErrorCode.EMPTY_DATASET

    def __init__(self, message: str = "cannot average an empty list of scores"):
        super().__init__(message)


# ---------------------------------------------------------------------------
# Ingest errors
# ---------------------------------------------------------------------------

class ParseError(AggregatorError):
    code = ErrorCode.PARSE_ERROR

    def __init__(self, path: str, message: str, line: int | None = None,
                 column: int | None = None):
        where = f"{path}:{line}:{column}" if line is not None else path
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line
        self.column = column


class UnknownVector(AggregatorError, ValueError):
    code = ErrorCode.UNKNOWN_VECTOR

    def __init__(self, token: str):
        super().__init__(f"unknown attack vector {token!r}")
        self.token = token


class ConfigError(AggregatorError):
    code = ErrorCode.CONFIG_ERROR
