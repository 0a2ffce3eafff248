"""
Extended Dependency Graph

Assets, dependency edges, a single entry point and the vulnerabilities
attached to assets. Depth is counted in nodes: the entry point is 1 and
every other asset sits at its shortest-path distance + 1.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

import networkx as nx

from cvss_aggregator.cvss import CvssVector
from cvss_aggregator.models import ErrorCode, ValidationErrors, ValidationIssue

logger = logging.getLogger(__name__)


class ExploitMaturity(Enum):
    """Public exploit status; values are the graph-file tokens."""
    NO_EXPLOIT = "none"
    NOT_DEFINED = "not_defined"
    THEORETICAL = "theoretical"
    PROOF_OF_CONCEPT = "poc"
    FUNCTIONAL = "functional"
    AUTOMATED = "automated"


@dataclass(frozen=True)
class Asset:
    """A node of the graph."""
    id: str
    name: str = ""

    @property
    def display_name(self) -> str:
        return self.name or self.id


@dataclass(frozen=True)
class Vulnerability:
    """A CVE attached to one asset."""
    cve: str
    vector: CvssVector
    base_score: float
    exploit_maturity: ExploitMaturity
    affects_functionality: bool
    asset: str


@dataclass(frozen=True, eq=False)
class Edg:
    """Validated, immutable dependency graph. Build with build_graph()."""
    entry_point: str
    assets: Mapping[str, Asset]
    edges: frozenset[tuple[str, str]]
    vulnerabilities: tuple[Vulnerability, ...]
    digraph: nx.DiGraph = field(repr=False)

    def children(self, asset_id: str) -> list[str]:
        """Direct dependencies of an asset, sorted by id."""
        return sorted(self.digraph.successors(asset_id))


@dataclass(frozen=True)
class DepthMap:
    """Per-asset depth (entry point = 1) and the graph's maximum depth L."""
    depths: Mapping[str, int]
    max_depth: int

    def __getitem__(self, asset_id: str) -> int:
        return self.depths[asset_id]


def validate_graph(
    entry: str,
    assets: Iterable[Asset],
    edges: Iterable[tuple[str, str]],
    vulns: Iterable[Vulnerability],
) -> list[ValidationIssue]:
    """
    Check every structural constraint of an EDG.

    Returns:
        All violations found (empty list when the graph is valid).
    """
    issues: list[ValidationIssue] = []
    asset_list = list(assets)
    counts = Counter(asset.id for asset in asset_list)
    known = set(counts)

    for asset_id, count in sorted(counts.items()):
        if count > 1:
            issues.append(ValidationIssue(
                ErrorCode.DUPLICATE_ASSET, asset_id,
                f"asset {asset_id!r} declared {count} times",
            ))

    has_entry = bool(entry) and entry in known
    if not has_entry:
        issues.append(ValidationIssue(
            ErrorCode.NO_ENTRY_POINT, entry or "",
            f"entry point {entry!r} is not a declared asset",
        ))

    graph = nx.DiGraph()
    graph.add_nodes_from(known)
    for source, target in edges:
        unknown = [node for node in (source, target) if node not in known]
        for node in unknown:
            issues.append(ValidationIssue(
                ErrorCode.UNKNOWN_ASSET, node,
                f"edge {source!r} -> {target!r} references undeclared asset {node!r}",
            ))
        if source == target:
            issues.append(ValidationIssue(
                ErrorCode.SELF_LOOP, source, f"asset {source!r} depends on itself",
            ))
        elif not unknown:
            graph.add_edge(source, target)

    for vuln in vulns:
        if vuln.asset not in known:
            issues.append(ValidationIssue(
                ErrorCode.UNKNOWN_ASSET, vuln.asset,
                f"{vuln.cve} is attached to undeclared asset {vuln.asset!r}",
            ))

    if has_entry:
        reachable = nx.descendants(graph, entry) | {entry}
        for asset_id in sorted(known - reachable):
            issues.append(ValidationIssue(
                ErrorCode.UNREACHABLE, asset_id,
                f"asset {asset_id!r} is not reachable from entry point {entry!r}",
            ))

    return issues


def build_graph(
    entry: str,
    assets: Iterable[Asset | str],
    edges: Iterable[tuple[str, str]],
    vulns: Iterable[Vulnerability],
) -> Edg:
    """
    Build and validate an Extended Dependency Graph.

    Args:
        entry: Id of the entry point (root of dependency)
        assets: Assets, or bare ids
        edges: (from, to) pairs meaning "to" is reached through "from"
        vulns: Vulnerabilities, each attached to a declared asset

    Raises:
        ValidationErrors: with every violation, not just the first
    """
    asset_list = [a if isinstance(a, Asset) else Asset(id=a) for a in assets]
    edge_list = [(str(source), str(target)) for source, target in edges]
    vuln_list = tuple(vulns)

    issues = validate_graph(entry, asset_list, edge_list, vuln_list)
    if issues:
        raise ValidationErrors(issues)

    unique_edges = frozenset(edge_list)
    if len(unique_edges) < len(edge_list):
        logger.warning(f"Collapsed {len(edge_list) - len(unique_edges)} duplicate edge(s)")

    digraph = nx.DiGraph()
    digraph.add_nodes_from(asset.id for asset in asset_list)
    digraph.add_edges_from(unique_edges)
    nx.freeze(digraph)

    logger.debug(
        f"Built EDG: {len(asset_list)} assets, {len(unique_edges)} edges, "
        f"{len(vuln_list)} vulnerabilities"
    )
    return Edg(
        entry_point=entry,
        assets={asset.id: asset for asset in asset_list},
        edges=unique_edges,
        vulnerabilities=vuln_list,
        digraph=digraph,
    )


def depth_map(graph: Edg) -> DepthMap:
    """Breadth-first depth of every asset; entry point = 1."""
    lengths = nx.single_source_shortest_path_length(graph.digraph, graph.entry_point)
    depths = {asset_id: distance + 1 for asset_id, distance in lengths.items()}
    return DepthMap(depths=depths, max_depth=max(depths.values()))


def branch_members(graph: Edg, depths: DepthMap | None = None) -> dict[str, frozenset[str]]:
    """
    Assets of each entry-point child's shortest-path subtree.

    An asset belongs to the branch of child c when some shortest path from
    the entry point to it passes through c, so an asset reached equally fast
    through two children belongs to both.
    """
    depths = depths or depth_map(graph)
    branches: dict[str, frozenset[str]] = {}
    for child in graph.children(graph.entry_point):
        lengths = nx.single_source_shortest_path_length(graph.digraph, child)
        branches[child] = frozenset(
            asset_id for asset_id, distance in lengths.items()
            if asset_id != graph.entry_point and distance == depths[asset_id] - 2
        )
    return branches
