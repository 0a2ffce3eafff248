"""
Aggregation Report

Data model for aggregation reports and its two renderings:
- JSON: stable key order, round-trips through parse_report()
- Text: per-vulnerability factor table followed by the sigma, f and Gamma
  lines and the "aggregated = X.Y" footer
"""

import io
import logging
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field
from rich.console import Console
from rich.table import Table

from cvss_aggregator.aggregation import Assessment, bayesian_trace
from cvss_aggregator.cvss import severity_rating
from cvss_aggregator.utils.formatting import format_compact

logger = logging.getLogger(__name__)

TEXT_WIDTH = 200


class ReportFormat(Enum):
    JSON = "json"
    TEXT = "text"


class VulnerabilityRow(BaseModel):
    """One row of the factor table."""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    cve: str
    asset: str
    depth: int = Field(..., ge=1)
    raw_score: float = Field(..., ge=0, le=10)
    attack_vector: str
    rho: int
    beta: float
    gamma: int
    mu: float
    lambda_: float = Field(..., alias="lambda")
    corrected: float = Field(..., ge=0, le=10)
    clamped: bool


class ContributionModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    cve: str
    corrected: float
    share: float = Field(..., ge=0, le=1)


class ExplainModel(BaseModel):
    """Intermediate values behind the headline numbers."""
    model_config = ConfigDict(frozen=True)

    max_depth: int
    reachable_vectors: list[str]
    gamma_literal: float | None = Field(
        default=None,
        description="10 - f / sigma before the degenerate override and clamping",
    )
    gamma_clamped: bool = False
    severity: str
    uncorrected_f: float = Field(..., description="Bayesian sum of the raw scores")
    trace: list[float] = Field(default_factory=list)
    branch_scores: dict[str, float] = Field(default_factory=dict)
    dominant_branch_name: str | None = None


class ReportModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    vulnerabilities: list[VulnerabilityRow]
    sigma: float | None
    sigma_kind: str | None
    f: float
    gamma: float
    gamma_display: str
    degenerate: bool
    clamped_entries: list[str]
    contributions: list[ContributionModel]
    dominant_branch: str | None
    explain: ExplainModel | None = None


def build_report(assessment: Assessment, explain: bool = False) -> ReportModel:
    """
    Turn an assessment into a report.

    The explain block is always attached to degenerate or Gamma-clamped
    results so the literal formula value is recorded.
    """
    result = assessment.result
    rows = [
        VulnerabilityRow(
            cve=row.vulnerability.cve,
            asset=row.vulnerability.asset,
            depth=row.depth,
            raw_score=row.score.raw,
            attack_vector=row.vulnerability.vector.attack_vector.value,
            rho=row.factors.rho,
            beta=row.factors.beta,
            gamma=row.factors.gamma,
            mu=row.factors.mu,
            lambda_=row.factors.lambda_,
            corrected=row.score.corrected,
            clamped=row.score.clamped,
        )
        for row in assessment.rows
    ]

    explain_block = None
    if explain or result.degenerate or result.gamma_clamped:
        explain_block = ExplainModel(
            max_depth=assessment.max_depth,
            reachable_vectors=sorted(v.label for v in assessment.context.reachable_vectors),
            gamma_literal=result.gamma_literal,
            gamma_clamped=result.gamma_clamped,
            severity=severity_rating(result.gamma_score),
            uncorrected_f=assessment.uncorrected_f,
            trace=bayesian_trace(row.score.corrected for row in assessment.rows),
            branch_scores=dict(result.branch_scores),
            dominant_branch_name=(
                assessment.graph.assets[result.dominant_branch].display_name
                if result.dominant_branch else None
            ),
        )

    return ReportModel(
        vulnerabilities=rows,
        sigma=result.sigma,
        sigma_kind=result.sigma_kind.value if result.sigma_kind else None,
        f=result.f_value,
        gamma=result.gamma_score,
        gamma_display=result.gamma_display,
        degenerate=result.degenerate,
        clamped_entries=list(result.clamped_entries),
        contributions=[
            ContributionModel(cve=c.vulnerability_id, corrected=c.corrected, share=c.share)
            for c in result.contributions
        ],
        dominant_branch=result.dominant_branch,
        explain=explain_block,
    )


def _factor_table(report: ReportModel) -> Table:
    table = Table(box=None, show_edge=False, header_style=None)
    for header in ("CVE", "CVSS", "AV", "rho", "beta", "gamma", "mu",
                   "lambda", "corrected", "clamped"):
        table.add_column(header, no_wrap=True)
    for row in report.vulnerabilities:
        table.add_row(
            row.cve,
            format_compact(row.raw_score, 1),
            row.attack_vector,
            str(row.rho),
            format_compact(row.beta),
            str(row.gamma),
            format_compact(row.mu),
            format_compact(row.lambda_),
            format_compact(row.corrected),
            "yes" if row.clamped else "no",
        )
    return table


def _render_text(report: ReportModel) -> str:
    buffer = io.StringIO()
    console = Console(
        file=buffer, width=TEXT_WIDTH, force_terminal=False, no_color=True,
        highlight=False, emoji=False, markup=False, soft_wrap=True,
    )
    if report.vulnerabilities:
        console.print(_factor_table(report))
    else:
        console.print("no vulnerabilities")
    console.print()

    explain = report.explain
    sigma = "undefined" if report.sigma is None else f"{report.sigma}"
    console.print(f"sigma ({report.sigma_kind or 'n/a'}) = {sigma}")
    console.print(f"f = {report.f}")
    console.print(f"gamma = {report.gamma} ({severity_rating(report.gamma)})")

    if report.degenerate and explain:
        console.print(
            f"degenerate: every corrected score is 0 "
            f"(formula value {explain.gamma_literal}, reported as 0)"
        )
    elif explain and explain.gamma_clamped:
        literal = "undefined" if explain.gamma_literal is None else explain.gamma_literal
        console.print(f"gamma clamped to [0, 10] (formula value {literal})")
    if report.clamped_entries:
        console.print(f"corrected scores clamped to 10: {', '.join(report.clamped_entries)}")
    branch = report.dominant_branch or "none"
    if explain and explain.dominant_branch_name not in (None, report.dominant_branch):
        branch = f"{branch} ({explain.dominant_branch_name})"
    console.print(f"dominant branch = {branch}")

    if explain and (explain.trace or explain.branch_scores or report.contributions):
        console.print()
        console.print(f"max depth L = {explain.max_depth}")
        console.print(f"reachable vectors = {', '.join(explain.reachable_vectors) or 'none'}")
        console.print(f"uncorrected f = {explain.uncorrected_f}")
        if explain.trace:
            console.print("bayesian sum:")
            for step, value in enumerate(explain.trace):
                console.print(f"  a_{step} = {value}")
        if report.contributions:
            console.print("contributions:")
            for c in report.contributions:
                console.print(f"  {c.cve} {format_compact(c.corrected)} {c.share:.1%}")
        if explain.branch_scores:
            console.print("branches:")
            for branch, score in sorted(explain.branch_scores.items()):
                console.print(f"  {branch} {format_compact(score)}")

    console.print()
    console.print(f"aggregated = {report.gamma_display}")
    return buffer.getvalue()


def render_report(report: ReportModel, fmt: ReportFormat | str = ReportFormat.JSON) -> bytes:
    """
    Render a report as UTF-8 bytes.

    Example:
        render_report(build_report(assessment), ReportFormat.TEXT)
        # ... table ...
        # aggregated = 9.1
    """
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.TEXT:
        return _render_text(report).encode("utf-8")
    exclude = {"explain"} if report.explain is None else None
    return (report.model_dump_json(indent=2, by_alias=True, exclude=exclude) + "\n").encode("utf-8")


def parse_report(data: bytes | str) -> ReportModel:
    """Parse a JSON report produced by render_report()."""
    return ReportModel.model_validate_json(data)
