"""Connectivity, cycle rank, bipartiteness and spanning trees (via networkx)."""
from __future__ import annotations

import logging
from typing import Optional

import networkx as nx

from src.utils.errors import DisconnectedGraphError, GraphValidationError

from .mwgraph import MwGraph

logger = logging.getLogger(__name__)


def to_networkx(g: MwGraph) -> nx.MultiGraph:
    """Undirected multigraph view; edge keys are arc ids, orientation kept as attributes."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(g.vertex_ids)
    for a in g.arcs:
        graph.add_edge(a.tail, a.head, key=a.id, tail=a.tail, head=a.head)
    return graph


def is_connected(g: MwGraph) -> bool:
    if g.n_vertices == 0:
        return False
    return nx.is_connected(to_networkx(g))


def require_connected(g: MwGraph, what: str) -> None:
    if g.n_vertices == 0:
        raise GraphValidationError(f"{what}: empty graph")
    if not is_connected(g):
        raise DisconnectedGraphError(f"{what} requires a connected graph")


def betti(g: MwGraph) -> int:
    """|E| - |V| + 1 for a connected graph."""
    require_connected(g, "betti")
    return g.n_arcs - g.n_vertices + 1


def is_bipartite(g: MwGraph) -> Optional[tuple[frozenset[str], frozenset[str]]]:
    """A 2-coloring with no monochromatic arc, or None.

    In every component the first vertex (in graph order) gets the first color.
    """
    if any(a.is_loop for a in g.arcs):
        return None
    graph = to_networkx(g)
    if not nx.is_bipartite(graph):
        return None
    first: set[str] = set()
    second: set[str] = set()
    order = {vid: i for i, vid in enumerate(g.vertex_ids)}
    for component in nx.connected_components(graph):
        root = min(component, key=order.__getitem__)
        coloring = nx.bipartite.color(graph.subgraph(component))
        for vid in component:
            (first if coloring[vid] == coloring[root] else second).add(vid)
    return frozenset(first), frozenset(second)


def spanning_tree_arcs(g: MwGraph) -> list[str]:
    """Arc ids of a spanning tree (Kruskal over arcs in graph order)."""
    require_connected(g, "spanning tree")
    graph = nx.MultiGraph()
    graph.add_nodes_from(g.vertex_ids)
    for position, a in enumerate(g.arcs):
        graph.add_edge(a.tail, a.head, key=a.id, order=position)
    edges = nx.minimum_spanning_edges(graph, algorithm="kruskal", weight="order", keys=True, data=False)
    tree = [key for _, _, key in edges]
    logger.debug("spanning tree: %d of %d arcs", len(tree), g.n_arcs)
    return tree


__all__ = [
    "to_networkx",
    "is_connected",
    "require_connected",
    "betti",
    "is_bipartite",
    "spanning_tree_arcs",
]
