"""
Gauge reduction and cycle fluxes.

Two potentials are cohomologous when they differ by dφ for a vertex phase φ,
(dφ)_e = φ(head) - φ(tail). Cohomologous potentials give unitarily equivalent
Laplacians, and they are characterized by their fluxes around cycles. The
reduction below picks φ so that the potential vanishes on a spanning tree;
what survives on the chords is exactly the flux of each fundamental cycle.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from src.utils.errors import GraphValidationError

from .mwgraph import MwGraph, reduce_angle
from .topology import require_connected, spanning_tree_arcs

logger = logging.getLogger(__name__)

Walk = Sequence[tuple[str, int]]


@dataclass(frozen=True)
class GaugeResult:
    """φ, the reduced potential α + dφ, and the chords carrying it."""

    phi: Mapping[str, float]
    reduced_alpha: Mapping[str, float]
    support: frozenset[str]
    tree_arcs: tuple[str, ...]

    def apply(self, g: MwGraph) -> MwGraph:
        """``g`` with its potential replaced by the reduced one."""
        return g.with_potential(self.reduced_alpha)


def gauge_transform(g: MwGraph, phi: Mapping[str, float]) -> MwGraph:
    """α ↦ α + dφ; vertices missing from ``phi`` get phase 0."""
    g.check_vertices(phi)
    return g.with_potential(
        {a.id: a.alpha + phi.get(a.head, 0.0) - phi.get(a.tail, 0.0) for a in g.arcs}
    )


def gauge_reduce(g: MwGraph) -> GaugeResult:
    require_connected(g, "gauge_reduce")
    tree = spanning_tree_arcs(g)

    adjacency: dict[str, list] = {vid: [] for vid in g.vertex_ids}
    for aid in tree:
        a = g.arc(aid)
        adjacency[a.tail].append(a)
        adjacency[a.head].append(a)

    root = g.vertices[0].id
    phi = {root: 0.0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for a in adjacency[v]:
            w = a.other_end(v)
            if w in phi:
                continue
            # choose φ(w) so that α_a + φ(head) - φ(tail) = 0
            phi[w] = phi[v] - a.alpha if w == a.head else phi[v] + a.alpha
            queue.append(w)

    phi = {vid: reduce_angle(phi[vid]) for vid in g.vertex_ids}
    tree_set = frozenset(tree)
    reduced = {}
    for a in g.arcs:
        reduced[a.id] = 0.0 if a.id in tree_set else reduce_angle(a.alpha + phi[a.head] - phi[a.tail])
    chords = frozenset(a.id for a in g.arcs if a.id not in tree_set)
    logger.debug("gauge reduced %d arcs to %d chords", g.n_arcs, len(chords))
    return GaugeResult(phi=phi, reduced_alpha=reduced, support=chords, tree_arcs=tuple(tree))


def cycle_fluxes(g: MwGraph) -> dict[str, float]:
    """Flux of each fundamental cycle, keyed by the chord that closes it.

    The cycle runs along the chord from tail to head and back through the tree.
    """
    result = gauge_reduce(g)
    return {aid: result.reduced_alpha[aid] for aid in g.arc_ids if aid in result.support}


def walk_flux(g: MwGraph, walk: Walk) -> float:
    """Signed sum of α along a closed walk of ``(arc_id, ±1)`` steps, mod 2π."""
    if not walk:
        return 0.0
    total = 0.0
    start = position = None
    for aid, sign in walk:
        a = g.arc(aid)
        if sign not in (1, -1):
            raise GraphValidationError(f"walk step on {aid!r} has sign {sign!r}; expected +1 or -1")
        source, target = (a.tail, a.head) if sign == 1 else (a.head, a.tail)
        if position is None:
            start = source
        elif position != source:
            raise GraphValidationError(f"walk breaks at {aid!r}: at {position!r}, arc leaves {source!r}")
        position = target
        total += sign * a.alpha
    if position != start:
        raise GraphValidationError(f"walk is not closed: starts at {start!r}, ends at {position!r}")
    return reduce_angle(total)


__all__ = ["GaugeResult", "Walk", "gauge_reduce", "gauge_transform", "cycle_fluxes", "walk_flux"]
