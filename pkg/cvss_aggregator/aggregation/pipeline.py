"""
Aggregation Pipeline

Runs the five algorithm steps over a validated graph:

1. correction factors for each vulnerability
2. summarized factor lambda
3. corrected scores (clamped to 10)
4. average factor sigma over all initial scores
5. aggregation
"""

import logging
from dataclasses import dataclass

from cvss_aggregator.aggregation.aggregator import (
    AggregationEntry,
    AggregationInput,
    AggregationResult,
    aggregate,
)
from cvss_aggregator.aggregation.bayes import bayesian_sum
from cvss_aggregator.factors import (
    AverageKind,
    CorrectedScore,
    CorrectionFactors,
    DeploymentContext,
    Interpolation,
    average_factor,
    corrected_score,
    correction_factors,
    linear_deepness,
)
from cvss_aggregator.graph import Edg, Vulnerability, depth_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FactorRow:
    """Everything computed for one vulnerability."""
    vulnerability: Vulnerability
    depth: int
    factors: CorrectionFactors
    score: CorrectedScore


@dataclass(frozen=True)
class Assessment:
    graph: Edg
    context: DeploymentContext
    max_depth: int
    rows: tuple[FactorRow, ...]
    result: AggregationResult
    uncorrected_f: float


def to_entries(rows: tuple[FactorRow, ...]) -> tuple[AggregationEntry, ...]:
    return tuple(
        AggregationEntry(
            vulnerability_id=row.vulnerability.cve,
            raw=row.score.raw,
            lambda_=row.score.lambda_,
            corrected=row.score.corrected,
            clamped=row.score.clamped,
            asset=row.vulnerability.asset,
        )
        for row in rows
    )


def assess(
    graph: Edg,
    context: DeploymentContext,
    sigma_kind: AverageKind = AverageKind.ARITHMETIC,
    interpolation: Interpolation = linear_deepness,
) -> Assessment:
    """
    Compute every factor and the final aggregation for a graph.

    Example:
        graph = load_graph("openplc_v3.json")
        context = load_context("insider.json")
        assessment = assess(graph, context)
        assessment.result.gamma_display  # "9.1"
    """
    depths = depth_map(graph)

    rows = []
    for vuln in graph.vulnerabilities:
        depth = depths[vuln.asset]
        factors = correction_factors(vuln, depth, depths.max_depth, context, interpolation)
        rows.append(FactorRow(
            vulnerability=vuln,
            depth=depth,
            factors=factors,
            score=corrected_score(vuln.base_score, factors.lambda_),
        ))
    rows_tuple = tuple(rows)

    initial_scores = [vuln.base_score for vuln in graph.vulnerabilities]
    sigma = average_factor(initial_scores, sigma_kind) if initial_scores else None

    result = aggregate(AggregationInput(entries=to_entries(rows_tuple), sigma=sigma), graph)
    logger.info(
        f"Assessed {len(rows_tuple)} vulnerabilities (L={depths.max_depth}): "
        f"aggregated = {result.gamma_display}"
    )
    return Assessment(
        graph=graph,
        context=context,
        max_depth=depths.max_depth,
        rows=rows_tuple,
        result=result,
        uncorrected_f=bayesian_sum(initial_scores),
    )
