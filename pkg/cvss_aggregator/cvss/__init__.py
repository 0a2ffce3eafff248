"""
CVSS Module

CVSS v3.1 base vector parsing, rendering and scoring.
"""

from .vector import (
    AttackVector,
    AttackComplexity,
    PrivilegesRequired,
    UserInteraction,
    Scope,
    Impact,
    CvssVector,
    parse_vector,
    render_vector,
)
from .scoring import (
    base_score,
    impact_subscore,
    exploitability_subscore,
    roundup,
    severity_rating,
)

__all__ = [
    # Metrics
    "AttackVector",
    "AttackComplexity",
    "PrivilegesRequired",
    "UserInteraction",
    "Scope",
    "Impact",
    "CvssVector",
    # Vector strings
    "parse_vector",
    "render_vector",
    # Scoring
    "base_score",
    "impact_subscore",
    "exploitability_subscore",
    "roundup",
    "severity_rating",
]
