"""
Graph Module

Extended Dependency Graph of the system under test.
"""

from .edg import (
    ExploitMaturity,
    Asset,
    Vulnerability,
    Edg,
    DepthMap,
    validate_graph,
    build_graph,
    depth_map,
    branch_members,
)

__all__ = [
    "ExploitMaturity",
    "Asset",
    "Vulnerability",
    "Edg",
    "DepthMap",
    "validate_graph",
    "build_graph",
    "depth_map",
    "branch_members",
]
