"""
Input Schemas

JSON Schemas for graph specification files, deployment context files and
the optional configuration file, plus a helper that reports every schema
violation at once.
"""

import logging
from typing import Any

from jsonschema import Draft7Validator

from cvss_aggregator.graph import ExploitMaturity
from cvss_aggregator.models import ErrorCode, ValidationIssue

logger = logging.getLogger(__name__)


CVE_PATTERN = r"^CVE-[0-9]{4}-[0-9]{4,}$"

GRAPH_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["entry_point", "assets"],
    "properties": {
        "name": {"type": "string"},
        "description": {"type": "string"},
        "entry_point": {"type": "string"},
        "assets": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id"],
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "name": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "string", "minLength": 1},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "vulnerabilities": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "cve", "asset", "vector", "affects_functionality", "exploit_maturity",
                ],
                "properties": {
                    "cve": {"type": "string", "pattern": CVE_PATTERN},
                    "asset": {"type": "string", "minLength": 1},
                    "vector": {"type": "string"},
                    "base_score": {"type": "number", "minimum": 0, "maximum": 10},
                    "affects_functionality": {"type": "boolean"},
                    "exploit_maturity": {"enum": [m.value for m in ExploitMaturity]},
                    "description": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

CONTEXT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["reachable_vectors"],
    "properties": {
        "reachable_vectors": {"type": "array", "items": {"type": "string"}},
        "description": {"type": "string"},
    },
    "additionalProperties": False,
}

CONFIG_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "logging": {
            "type": "object",
            "properties": {
                "level": {"enum": ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]},
            },
            "additionalProperties": False,
        },
        "aggregation": {
            "type": "object",
            "properties": {
                "sigma": {"enum": ["arithmetic", "harmonic"]},
                "interpolation": {"type": "string"},
            },
            "additionalProperties": False,
        },
        "report": {
            "type": "object",
            "properties": {"format": {"enum": ["json", "text"]}},
            "additionalProperties": False,
        },
        "simulation": {
            "type": "object",
            "properties": {
                "size": {"type": "integer", "minimum": 1},
                "seed": {"type": "integer", "minimum": 0},
                "shape": {
                    "enum": ["centered", "high_heavy", "low_heavy", "bimodal", "uniform"],
                },
            },
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}


def schema_issues(instance: Any, schema: dict[str, Any]) -> list[ValidationIssue]:
    """
    Validate an instance against a JSON Schema.

    Returns:
        One ValidationIssue per violation, in document order.
    """
    validator = Draft7Validator(schema)
    issues = []
    for error in sorted(validator.iter_errors(instance), key=lambda e: list(map(str, e.path))):
        location = "/".join(str(part) for part in error.path) or "<root>"
        issues.append(ValidationIssue(
            code=ErrorCode.SCHEMA_VIOLATION,
            subject=location,
            message=f"{location}: {error.message}",
        ))
    if issues:
        logger.debug(f"Schema validation failed with {len(issues)} issue(s)")
    return issues
