"""
CVSS v3.1 Base Score

Base-score equations with the published metric weights and the
integer-guarded round-up of the v3.1 specification.
"""

import math

from cvss_aggregator.cvss.vector import (
    AttackComplexity,
    AttackVector,
    CvssVector,
    Impact,
    PrivilegesRequired,
    Scope,
    UserInteraction,
)
from cvss_aggregator.utils.formatting import round_half_up


AV_WEIGHTS = {
    AttackVector.NETWORK: 0.85,
    AttackVector.ADJACENT: 0.62,
    AttackVector.LOCAL: 0.55,
    AttackVector.PHYSICAL: 0.2,
}

AC_WEIGHTS = {
    AttackComplexity.LOW: 0.77,
    AttackComplexity.HIGH: 0.44,
}

# Privileges Required depends on Scope
PR_WEIGHTS = {
    Scope.UNCHANGED: {
        PrivilegesRequired.NONE: 0.85,
        PrivilegesRequired.LOW: 0.62,
        PrivilegesRequired.HIGH: 0.27,
    },
    Scope.CHANGED: {
        PrivilegesRequired.NONE: 0.85,
        PrivilegesRequired.LOW: 0.68,
        PrivilegesRequired.HIGH: 0.5,
    },
}

UI_WEIGHTS = {
    UserInteraction.NONE: 0.85,
    UserInteraction.REQUIRED: 0.62,
}

CIA_WEIGHTS = {
    Impact.NONE: 0.0,
    Impact.LOW: 0.22,
    Impact.HIGH: 0.56,
}

# Qualitative severity rating scale: (upper bound inclusive, label)
SEVERITY_BANDS = (
    (0.0, "None"),
    (3.9, "Low"),
    (6.9, "Medium"),
    (8.9, "High"),
    (10.0, "Critical"),
)


def roundup(value: float) -> float:
    """
    Smallest one-decimal number >= value.

    Works on an integer scaled by 100000 so that values such as
    4.000000000000001 are not pushed up to 4.1.
    """
    scaled = round(value * 100000)
    if scaled % 10000 == 0:
        return scaled / 100000.0
    return (math.floor(scaled / 10000) + 1) / 10.0


def impact_subscore(vector: CvssVector) -> float:
    """Impact sub-score (may be negative for Scope:Changed with tiny ISS)."""
    iss = 1 - (
        (1 - CIA_WEIGHTS[vector.confidentiality])
        * (1 - CIA_WEIGHTS[vector.integrity])
        * (1 - CIA_WEIGHTS[vector.availability])
    )
    if vector.scope is Scope.UNCHANGED:
        return 6.42 * iss
    return 7.52 * (iss - 0.029) - 3.25 * (iss - 0.02) ** 15


def exploitability_subscore(vector: CvssVector) -> float:
    return (
        8.22
        * AV_WEIGHTS[vector.attack_vector]
        * AC_WEIGHTS[vector.attack_complexity]
        * PR_WEIGHTS[vector.scope][vector.privileges_required]
        * UI_WEIGHTS[vector.user_interaction]
    )


def base_score(vector: CvssVector) -> float:
    """
    CVSS v3.1 base score of a vector.

    Returns:
        Score in [0.0, 10.0] with one-decimal granularity.

    Example:
        base_score(parse_vector("AV:N/AC:L/PR:N/UI:N/S:U/C:H/I:H/A:H"))  # 9.8
    """
    impact = impact_subscore(vector)
    if impact <= 0:
        return 0.0

    exploitability = exploitability_subscore(vector)
    if vector.scope is Scope.UNCHANGED:
        return roundup(min(impact + exploitability, 10.0))
    return roundup(min(1.08 * (impact + exploitability), 10.0))


def severity_rating(score: float) -> str:
    """
    Qualitative rating ("None", "Low", "Medium", "High", "Critical").

    The score is first rounded half-up to one decimal, so the rating always
    agrees with the displayed value.
    """
    score = float(round_half_up(score, 1))
    for upper, label in SEVERITY_BANDS:
        if score <= upper:
            return label
    return "Critical"
