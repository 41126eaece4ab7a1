"""
Arc and vertex virtualization.

Virtualizing arcs deletes them while every vertex keeps its weight; the
Laplacian of the result is spectrally smaller. Virtualizing vertices keeps
the graph but restricts the Laplacian to functions vanishing on the excluded
set (a principal compression); the result is spectrally larger. A vertex set
is a neighborhood of an arc set when it touches every arc of it.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from src.utils.errors import GraphValidationError

from .mwgraph import MwGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DirichletGraph:
    """A graph together with the vertex set V0 on which functions vanish."""

    base: MwGraph
    excluded: frozenset[str]

    def __post_init__(self) -> None:
        excluded = self.base.check_vertices(self.excluded)
        object.__setattr__(self, "excluded", excluded)
        if len(excluded) >= self.base.n_vertices:
            raise GraphValidationError("virtualizing every vertex leaves no active vertex")
        for a in self.base.arcs:
            if a.tail in excluded and a.head in excluded:
                raise GraphValidationError(f"arc {a.id!r} lies inside the excluded set")

    @property
    def active_vertices(self) -> tuple[str, ...]:
        return tuple(vid for vid in self.base.vertex_ids if vid not in self.excluded)

    @property
    def dimension(self) -> int:
        return self.base.n_vertices - len(self.excluded)


def virtualize_arcs(g: MwGraph, arcs: Iterable[str]) -> MwGraph:
    """Remove ``arcs``; vertex weights and everything on the other arcs stay."""
    removed = g.check_arcs(arcs)
    return g.with_arcs(a for a in g.arcs if a.id not in removed)


def virtualize_vertices(g: MwGraph, vertices: Iterable[str]) -> DirichletGraph:
    """Exclude ``vertices``; arcs from them to active vertices stay as Dirichlet terms.

    Arcs with both endpoints excluded (loops at excluded vertices among them)
    never reach the compressed operator and are dropped.
    """
    excluded = g.check_vertices(vertices)
    if len(excluded) >= g.n_vertices:
        raise GraphValidationError("virtualizing every vertex leaves no active vertex")
    kept = g.with_arcs(a for a in g.arcs if not (a.tail in excluded and a.head in excluded))
    logger.debug("virtualized %d vertices, %d arcs dropped", len(excluded), g.n_arcs - kept.n_arcs)
    return DirichletGraph(kept, excluded)


def is_neighborhood(g: MwGraph, arcs: Iterable[str], vertices: Iterable[str]) -> bool:
    """True iff every arc in ``arcs`` has an endpoint in ``vertices``."""
    arc_set = g.check_arcs(arcs)
    vertex_set = g.check_vertices(vertices)
    return all(g.arc(aid).tail in vertex_set or g.arc(aid).head in vertex_set for aid in arc_set)


def minimal_neighborhood(g: MwGraph, arcs: Iterable[str]) -> frozenset[str]:
    """Greedy cover of ``arcs`` by vertices.

    Repeatedly takes the vertex touching the most uncovered arcs; ties go to
    the smallest vertex id.
    """
    uncovered = {g.arc(aid) for aid in g.check_arcs(arcs)}
    chosen: set[str] = set()
    while uncovered:
        counts: dict[str, int] = {}
        for a in uncovered:
            for vid in {a.tail, a.head}:
                counts[vid] = counts.get(vid, 0) + 1
        best = min(counts, key=lambda vid: (-counts[vid], vid))
        chosen.add(best)
        uncovered = {a for a in uncovered if best not in (a.tail, a.head)}
    return frozenset(chosen)


def arcs_between(g: MwGraph, first: Iterable[str], second: Iterable[str]) -> frozenset[str]:
    """E(A, B): arcs going from A to B or from B to A."""
    a_set = g.check_vertices(first)
    b_set = g.check_vertices(second)
    return frozenset(
        a.id
        for a in g.arcs
        if (a.tail in a_set and a.head in b_set) or (a.tail in b_set and a.head in a_set)
    )


def connecting_arcs(g: MwGraph, vertices: Iterable[str]) -> frozenset[str]:
    """Arcs with exactly one endpoint in ``vertices``."""
    inside = g.check_vertices(vertices)
    return arcs_between(g, inside, frozenset(g.vertex_ids) - inside)


__all__ = [
    "DirichletGraph",
    "virtualize_arcs",
    "virtualize_vertices",
    "is_neighborhood",
    "minimal_neighborhood",
    "arcs_between",
    "connecting_arcs",
]
