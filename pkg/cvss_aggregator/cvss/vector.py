"""
CVSS v3.1 Vector

Base-metric enumerations, the CvssVector value type, and the vector
string parser/renderer.

Grammar: optional "CVSS:3.1/" (or "CVSS:3.0/") prefix followed by
slash-separated "METRIC:VALUE" tokens, one per base metric.
"""

import logging
from dataclasses import dataclass
from enum import Enum

from cvss_aggregator.models import (
    DuplicateMetric,
    MalformedVector,
    MissingMetric,
    UnsupportedMetricGroup,
)

logger = logging.getLogger(__name__)


CANONICAL_PREFIX = "CVSS:3.1/"
ACCEPTED_PREFIXES = ("CVSS:3.1/", "CVSS:3.0/")


class AttackVector(Enum):
    NETWORK = "N"
    ADJACENT = "A"
    LOCAL = "L"
    PHYSICAL = "P"

    @property
    def label(self) -> str:
        """Lower-case name used in context files ("network", ...)."""
        return self.name.lower()

    @classmethod
    def from_label(cls, label: str) -> "AttackVector":
        """Look up by context-file label. Raises KeyError when unknown."""
        if label != label.lower():
            raise KeyError(label)
        return cls[label.upper()]


class AttackComplexity(Enum):
    LOW = "L"
    HIGH = "H"


class PrivilegesRequired(Enum):
    NONE = "N"
    LOW = "L"
    HIGH = "H"


class UserInteraction(Enum):
    NONE = "N"
    REQUIRED = "R"


class Scope(Enum):
    UNCHANGED = "U"
    CHANGED = "C"


class Impact(Enum):
    """Confidentiality, integrity and availability impact levels."""
    NONE = "N"
    LOW = "L"
    HIGH = "H"


@dataclass(frozen=True, slots=True)
class CvssVector:
    """The eight CVSS v3.1 base metrics."""
    attack_vector: AttackVector
    attack_complexity: AttackComplexity
    privileges_required: PrivilegesRequired
    user_interaction: UserInteraction
    scope: Scope
    confidentiality: Impact
    integrity: Impact
    availability: Impact


# Metric code -> (CvssVector field, enum type), in standard order
BASE_METRICS: dict[str, tuple[str, type[Enum]]] = {
    "AV": ("attack_vector", AttackVector),
    "AC": ("attack_complexity", AttackComplexity),
    "PR": ("privileges_required", PrivilegesRequired),
    "UI": ("user_interaction", UserInteraction),
    "S": ("scope", Scope),
    "C": ("confidentiality", Impact),
    "I": ("integrity", Impact),
    "A": ("availability", Impact),
}

# Temporal and environmental metric codes
NON_BASE_METRICS = frozenset({
    "E", "RL", "RC",
    "CR", "IR", "AR",
    "MAV", "MAC", "MPR", "MUI", "MS", "MC", "MI", "MA",
})


def parse_vector(text: str) -> CvssVector:
    """
    Parse a CVSS v3.1 base vector string.

    Args:
        text: e.g. "CVSS:3.1/AV:N/AC:L/PR:N/UI:N/S:U/C:H/I:H/A:H"

    Returns:
        The decoded CvssVector.

    Raises:
        MalformedVector: token that is not a known base metric with a legal value
            (position is the token's character offset in text)
        UnsupportedMetricGroup: temporal or environmental metric present
        DuplicateMetric: a base metric given twice
        MissingMetric: a base metric absent
    """
    body = text
    offset = 0
    if text.startswith("CVSS:"):
        prefix = next((p for p in ACCEPTED_PREFIXES if text.startswith(p)), None)
        if prefix is None:
            raise MalformedVector(0, text.split("/", 1)[0])
        if prefix != CANONICAL_PREFIX:
            logger.warning(f"Accepting {prefix.rstrip('/')} vector as 3.1: {text}")
        body = text[len(prefix):]
        offset = len(prefix)

    values: dict[str, Enum] = {}
    position = offset
    for token in body.split("/"):
        code, sep, raw_value = token.partition(":")
        if not sep or not code or not raw_value:
            raise MalformedVector(position, token)
        if code in NON_BASE_METRICS:
            raise UnsupportedMetricGroup(code)
        if code not in BASE_METRICS:
            raise MalformedVector(position, token)
        if code in values:
            raise DuplicateMetric(code)

        _, enum_type = BASE_METRICS[code]
        try:
            values[code] = enum_type(raw_value)
        except ValueError:
            raise MalformedVector(position, token) from None
        position += len(token) + 1

    for code in BASE_METRICS:
        if code not in values:
            raise MissingMetric(code)

    return CvssVector(**{BASE_METRICS[code][0]: value for code, value in values.items()})


def render_vector(vector: CvssVector) -> str:
    """Render the canonical "CVSS:3.1/..." string in standard metric order."""
    parts = [
        f"{code}:{getattr(vector, field_name).value}"
        for code, (field_name, _) in BASE_METRICS.items()
    ]
    return CANONICAL_PREFIX + "/".join(parts)
