"""
Graph and Context Loader

Reads graph specification files and deployment context files (JSON, or
YAML by file suffix), validates them against their schemas and builds
the in-memory objects:

1. decode the file (ParseError with line/column on failure)
2. schema validation (every violation collected)
3. vector parsing and stated-score checks
4. structural graph validation
"""

import json
import logging
import math
from pathlib import Path
from typing import Any

import yaml

from cvss_aggregator.cvss import AttackVector, base_score, parse_vector
from cvss_aggregator.factors import DeploymentContext
from cvss_aggregator.graph import (
    Asset,
    Edg,
    ExploitMaturity,
    Vulnerability,
    build_graph,
    validate_graph,
)
from cvss_aggregator.ingest.schemas import CONTEXT_SCHEMA, GRAPH_SCHEMA, schema_issues
from cvss_aggregator.models import (
    ErrorCode,
    ParseError,
    ScoreMismatch,
    UnknownVector,
    ValidationErrors,
    ValidationIssue,
    VectorError,
    score_mismatch_issue,
)

logger = logging.getLogger(__name__)

YAML_SUFFIXES = {".yaml", ".yml"}

# Stated scores are one-decimal values; anything closer is the same score
SCORE_TOLERANCE = 1e-6


def _reject_constant(name: str) -> Any:
    raise ValueError(f"non-finite number {name} is not allowed")


def read_structured(path: str | Path) -> Any:
    """
    Decode a JSON or YAML file.

    Raises:
        ParseError: file unreadable or not valid JSON/YAML
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(str(path), f"cannot read file: {e}") from e

    if path.suffix.lower() in YAML_SUFFIXES:
        try:
            return yaml.safe_load(text)
        except yaml.YAMLError as e:
            mark = getattr(e, "problem_mark", None)
            problem = getattr(e, "problem", None) or str(e)
            if mark is not None:
                raise ParseError(str(path), problem, mark.line + 1, mark.column + 1) from e
            raise ParseError(str(path), problem) from e

    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise ParseError(str(path), e.msg, e.lineno, e.colno) from e
    except ValueError as e:
        raise ParseError(str(path), str(e)) from e


def graph_from_data(data: Any) -> Edg:
    """
    Build an EDG from a decoded graph specification.

    Raises:
        ScoreMismatch: when stated scores disagree and nothing else is wrong
        ValidationErrors: every schema, vector and structural violation
    """
    issues = schema_issues(data, GRAPH_SCHEMA)
    if issues:
        raise ValidationErrors(issues)

    assets = [Asset(id=a["id"], name=a.get("name", "")) for a in data["assets"]]
    edges = [(source, target) for source, target in data.get("edges", [])]

    vulns: list[Vulnerability] = []
    mismatches: list[tuple[str, float, float]] = []
    for record in data.get("vulnerabilities", []):
        cve = record["cve"]
        try:
            vector = parse_vector(record["vector"])
        except VectorError as e:
            issues.append(ValidationIssue(
                ErrorCode.INVALID_VECTOR, cve, f"{cve}: {type(e).__name__}: {e}",
            ))
            continue

        computed = base_score(vector)
        stated = record.get("base_score")
        if stated is not None and not math.isclose(stated, computed, abs_tol=SCORE_TOLERANCE):
            mismatches.append((cve, stated, computed))
            issues.append(score_mismatch_issue(cve, stated, computed))

        vulns.append(Vulnerability(
            cve=cve,
            vector=vector,
            base_score=computed,
            exploit_maturity=ExploitMaturity(record["exploit_maturity"]),
            affects_functionality=record["affects_functionality"],
            asset=record["asset"],
        ))

    issues.extend(validate_graph(data["entry_point"], assets, edges, vulns))
    if issues:
        if all(issue.code is ErrorCode.SCORE_MISMATCH for issue in issues):
            cve, stated, computed = mismatches[0]
            raise ScoreMismatch(cve, stated, computed, issues)
        raise ValidationErrors(issues)

    return build_graph(data["entry_point"], assets, edges, vulns)


def load_graph(path: str | Path) -> Edg:
    """
    Load and validate a graph specification file.

    Example:
        graph = load_graph("tests/fixtures/openplc_v3.json")
        graph.entry_point  # "webserver.py"
    """
    logger.debug(f"Loading graph from {path}")
    graph = graph_from_data(read_structured(path))
    logger.info(
        f"Loaded graph {path}: {len(graph.assets)} assets, "
        f"{len(graph.vulnerabilities)} vulnerabilities"
    )
    return graph


def context_from_data(data: Any) -> DeploymentContext:
    """
    Build a deployment context from decoded data.

    Labels are the lower-case attack vector names: network, adjacent,
    local, physical.

    Raises:
        ValidationErrors: data does not match the context schema
        UnknownVector: a label is not an attack vector
    """
    issues = schema_issues(data, CONTEXT_SCHEMA)
    if issues:
        raise ValidationErrors(issues)

    labels = data["reachable_vectors"]
    vectors = set()
    for label in labels:
        try:
            vectors.add(AttackVector.from_label(label))
        except KeyError:
            raise UnknownVector(label) from None

    if len(vectors) < len(labels):
        logger.warning(f"Ignoring {len(labels) - len(vectors)} duplicate reachable vector(s)")

    return DeploymentContext(
        reachable_vectors=frozenset(vectors),
        description=data.get("description", ""),
    )


def load_context(path: str | Path) -> DeploymentContext:
    logger.debug(f"Loading context from {path}")
    return context_from_data(read_structured(path))
