"""
Aggregator

Final aggregation Gamma = 10 - f / sigma over corrected scores, plus the
contribution analysis (per-vulnerability shares and the dominant branch
of the dependency graph).
"""

import logging
from dataclasses import dataclass, field
from typing import Mapping

from cvss_aggregator.aggregation.bayes import MAX_SCORE, bayesian_sum
from cvss_aggregator.factors import AverageFactor, AverageKind
from cvss_aggregator.graph import Edg, branch_members
from cvss_aggregator.utils.formatting import format_display

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AggregationEntry:
    """One vulnerability's contribution to the aggregation."""
    vulnerability_id: str
    raw: float
    lambda_: float
    corrected: float
    clamped: bool = False
    asset: str | None = None


@dataclass(frozen=True)
class AggregationInput:
    """Corrected scores in document order and the dataset's average factor."""
    entries: tuple[AggregationEntry, ...]
    sigma: AverageFactor | None = None


@dataclass(frozen=True)
class Contribution:
    vulnerability_id: str
    corrected: float
    share: float


@dataclass(frozen=True)
class ContributionAnalysis:
    ranked: tuple[Contribution, ...]
    dominant_branch: str | None
    branch_scores: Mapping[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class AggregationResult:
    f_value: float
    gamma_score: float
    gamma_display: str
    sigma: float | None
    sigma_kind: AverageKind | None
    contributions: tuple[Contribution, ...]
    dominant_branch: str | None
    degenerate: bool
    gamma_literal: float | None
    gamma_clamped: bool
    clamped_entries: tuple[str, ...]
    branch_scores: Mapping[str, float] = field(default_factory=dict)


def contributions(input: AggregationInput, graph: Edg | None = None) -> ContributionAnalysis:
    """
    Rank contributing vulnerabilities and find the dominant branch.

    Only entries with a positive corrected score are ranked. A branch is an
    entry-point child together with its shortest-path subtree; its score is
    the Bayesian sum of the corrected scores attached there.
    """
    contributing = [e for e in input.entries if e.corrected > 0]
    total = sum(e.corrected for e in contributing)
    ranked = tuple(
        Contribution(
            vulnerability_id=e.vulnerability_id,
            corrected=e.corrected,
            share=e.corrected / total,
        )
        for e in sorted(contributing, key=lambda e: (-e.corrected, e.vulnerability_id))
    )

    branch_scores: dict[str, float] = {}
    if graph is not None:
        for child, members in branch_members(graph).items():
            branch_scores[child] = bayesian_sum(
                e.corrected for e in input.entries if e.asset in members
            )

    dominant = None
    candidates = [(score, child) for child, score in branch_scores.items() if score > 0]
    if candidates:
        dominant = min(candidates, key=lambda item: (-item[0], item[1]))[1]

    return ContributionAnalysis(
        ranked=ranked, dominant_branch=dominant, branch_scores=branch_scores
    )


def aggregate(input: AggregationInput, graph: Edg | None = None) -> AggregationResult:
    """
    Aggregate corrected scores into Gamma.

    Gamma is clamped to [0, 10]. When every corrected score is 0 (or there
    are none) the result is degenerate: Gamma is 0 and the literal formula
    value is kept in gamma_literal.
    """
    values = [e.corrected for e in input.entries]
    f_value = bayesian_sum(values)
    degenerate = all(v == 0 for v in values)
    sigma = input.sigma.sigma if input.sigma else None

    if sigma is not None and sigma > 0:
        literal: float | None = MAX_SCORE - f_value / sigma
    elif f_value == 0:
        literal = MAX_SCORE
    else:
        # sigma == 0 with exploitable vulnerabilities: formula is unbounded below
        literal = None

    if degenerate:
        gamma, gamma_clamped = 0.0, False
    elif literal is None:
        gamma, gamma_clamped = 0.0, True
    else:
        gamma = min(max(literal, 0.0), MAX_SCORE)
        gamma_clamped = gamma != literal

    analysis = contributions(input, graph)
    result = AggregationResult(
        f_value=f_value,
        gamma_score=gamma,
        gamma_display=format_display(gamma),
        sigma=sigma,
        sigma_kind=input.sigma.kind if input.sigma else None,
        contributions=analysis.ranked,
        dominant_branch=analysis.dominant_branch,
        degenerate=degenerate,
        gamma_literal=literal,
        gamma_clamped=gamma_clamped,
        clamped_entries=tuple(e.vulnerability_id for e in input.entries if e.clamped),
        branch_scores=analysis.branch_scores,
    )
    logger.info(
        f"Aggregated {len(values)} scores: f={f_value:.5f} gamma={gamma:.5f} "
        f"degenerate={degenerate}"
    )
    return result
