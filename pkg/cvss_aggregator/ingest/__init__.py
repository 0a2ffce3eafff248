"""
Ingest Module

Graph/context file loading and report rendering.
"""

from .schemas import CONFIG_SCHEMA, CONTEXT_SCHEMA, GRAPH_SCHEMA, schema_issues
from .loader import (
    read_structured,
    graph_from_data,
    load_graph,
    context_from_data,
    load_context,
)
from .report import (
    ReportFormat,
    VulnerabilityRow,
    ContributionModel,
    ExplainModel,
    ReportModel,
    build_report,
    render_report,
    parse_report,
)

__all__ = [
    # Schemas
    "GRAPH_SCHEMA",
    "CONTEXT_SCHEMA",
    "CONFIG_SCHEMA",
    "schema_issues",
    # Loading
    "read_structured",
    "graph_from_data",
    "load_graph",
    "context_from_data",
    "load_context",
    # Reports
    "ReportFormat",
    "VulnerabilityRow",
    "ContributionModel",
    "ExplainModel",
    "ReportModel",
    "build_report",
    "render_report",
    "parse_report",
]
