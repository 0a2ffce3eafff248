"""
Correction Factors

Per-vulnerability factors that adapt a raw CVSS base score to the system
under test:

- functionality (rho): does the vulnerability disrupt any functionality
- deepness (beta): how far the affected asset sits from the entry point
- context (gamma): is the attack vector reachable where the system is deployed
- exploit (mu): maturity of public exploit code
- summarized (lambda): rho * beta * gamma * mu

plus the dataset-level average factor (sigma).
"""

import logging
import statistics
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable

from cvss_aggregator.cvss import AttackVector
from cvss_aggregator.graph import ExploitMaturity, Vulnerability
from cvss_aggregator.models import DepthOutOfRange, EmptyDataset

logger = logging.getLogger(__name__)


MAX_SCORE = 10.0

EXPLOIT_FACTORS: dict[ExploitMaturity, float] = {
    ExploitMaturity.NO_EXPLOIT: 0.0,
    ExploitMaturity.NOT_DEFINED: 0.5,
    ExploitMaturity.THEORETICAL: 1.25,
    ExploitMaturity.PROOF_OF_CONCEPT: 1.5,
    ExploitMaturity.FUNCTIONAL: 1.75,
    ExploitMaturity.AUTOMATED: 2.0,
}


class AverageKind(Enum):
    ARITHMETIC = "arithmetic"
    HARMONIC = "harmonic"


@dataclass(frozen=True)
class DeploymentContext:
    """Attack vectors an attacker can actually use in the deployment."""
    reachable_vectors: frozenset[AttackVector] = frozenset()
    description: str = ""


@dataclass(frozen=True)
class CorrectionFactors:
    """rho, beta, gamma, mu and their product lambda."""
    rho: int
    beta: float
    gamma: int
    mu: float
    lambda_: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "lambda_", summarized_factor(self.rho, self.beta, self.gamma, self.mu)
        )


@dataclass(frozen=True)
class CorrectedScore:
    raw: float
    lambda_: float
    corrected: float
    clamped: bool


@dataclass(frozen=True)
class AverageFactor:
    kind: AverageKind
    sigma: float


# (depth, max_depth) -> beta
Interpolation = Callable[[int, int], float]


def linear_deepness(depth: int, max_depth: int) -> float:
    """Linear interpolation: 1 at the entry layer, 1/L at the deepest layer."""
    return (max_depth - depth + 1) / max_depth


INTERPOLATIONS: dict[str, Interpolation] = {
    "linear": linear_deepness,
}


def get_interpolation(name: str) -> Interpolation:
    """Look up a named interpolation. Raises KeyError when unknown."""
    return INTERPOLATIONS[name]


def functionality_factor(vuln: Vulnerability) -> int:
    return 1 if vuln.affects_functionality else 0


def deepness_factor(
    depth: int,
    max_depth: int,
    interpolation: Interpolation = linear_deepness,
) -> float:
    """
    Deepness factor beta for an asset at the given depth.

    Raises:
        DepthOutOfRange: unless 1 <= depth <= max_depth
    """
    if max_depth < 1 or not 1 <= depth <= max_depth:
        raise DepthOutOfRange(depth, max_depth)
    return interpolation(depth, max_depth)


def context_factor(attack_vector: AttackVector, context: DeploymentContext) -> int:
    return 1 if attack_vector in context.reachable_vectors else 0


def exploit_factor(maturity: ExploitMaturity) -> float:
    return EXPLOIT_FACTORS[maturity]


def summarized_factor(rho: float, beta: float, gamma: float, mu: float) -> float:
    return rho * beta * gamma * mu


def correction_factors(
    vuln: Vulnerability,
    depth: int,
    max_depth: int,
    context: DeploymentContext,
    interpolation: Interpolation = linear_deepness,
) -> CorrectionFactors:
    """All correction factors of one vulnerability."""
    factors = CorrectionFactors(
        rho=functionality_factor(vuln),
        beta=deepness_factor(depth, max_depth, interpolation),
        gamma=context_factor(vuln.vector.attack_vector, context),
        mu=exploit_factor(vuln.exploit_maturity),
    )
    logger.debug(f"{vuln.cve}: {factors}")
    return factors


def corrected_score(score: float, lambda_: float) -> CorrectedScore:
    """Scale a raw score by lambda; values above 10 are set to 10."""
    scaled = lambda_ * score
    clamped = scaled > MAX_SCORE
    return CorrectedScore(
        raw=score,
        lambda_=lambda_,
        corrected=MAX_SCORE if clamped else scaled,
        clamped=clamped,
    )


def average_factor(initial_scores: Iterable[float], kind: AverageKind) -> AverageFactor:
    """
    Average factor sigma over all initial (uncorrected) scores.

    A dataset containing a 0.0 score has a harmonic mean of 0.

    Raises:
        EmptyDataset: when there are no scores
    """
    scores = list(initial_scores)
    if not scores:
        raise EmptyDataset()
    if kind is AverageKind.HARMONIC:
        sigma = statistics.harmonic_mean(scores)
    else:
        sigma = statistics.fmean(scores)
    return AverageFactor(kind=kind, sigma=sigma)
