"""
Magnetic weighted multigraphs.

An MwGraph is a finite directed multigraph whose vertices and arcs carry
positive weights and whose arcs carry a magnetic potential (an angle). Loops
and parallel arcs are allowed. Graphs are immutable; every operation that
"changes" a graph returns a new one.

Usage:
    from src.graph import Arc, MwGraph, Vertex, relative_weight
    g = MwGraph.from_edges([("v1", "v2"), ("v2", "v3")], weights="standard")
    relative_weight(g, "v2")  # 1.0
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from src.utils.errors import GraphValidationError, UnknownIdError

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


def reduce_angle(angle: float) -> float:
    """Reduce an angle into [0, 2π)."""
    if not math.isfinite(angle):
        raise GraphValidationError(f"angle must be finite, got {angle!r}")
    reduced = math.fmod(float(angle), TWO_PI)
    if reduced < 0.0:
        reduced += TWO_PI
    # fmod of a tiny negative number can land exactly on 2π after the shift
    return 0.0 if reduced >= TWO_PI else reduced


def angle_distance(a: float, b: float) -> float:
    """Distance of two angles on the circle, in [0, π]."""
    d = math.fmod(abs(a - b), TWO_PI)
    return min(d, TWO_PI - d)


@dataclass(frozen=True)
class Vertex:
    id: str
    weight: float = 1.0

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise GraphValidationError("vertex id must be a non-empty string")
        if not (math.isfinite(self.weight) and self.weight > 0):
            raise GraphValidationError(f"vertex {self.id!r}: weight must be positive, got {self.weight!r}")
        object.__setattr__(self, "weight", float(self.weight))


@dataclass(frozen=True)
class Arc:
    """A directed arc ``tail -> head`` with weight m_e and potential α_e in [0, 2π)."""

    id: str
    tail: str
    head: str
    weight: float = 1.0
    alpha: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise GraphValidationError("arc id must be a non-empty string")
        if not (math.isfinite(self.weight) and self.weight > 0):
            raise GraphValidationError(f"arc {self.id!r}: weight must be positive, got {self.weight!r}")
        object.__setattr__(self, "weight", float(self.weight))
        object.__setattr__(self, "alpha", reduce_angle(self.alpha))

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def other_end(self, v: str) -> str:
        """The endpoint opposite to ``v`` (``v`` itself for a loop)."""
        if v == self.tail:
            return self.head
        if v == self.head:
            return self.tail
        raise GraphValidationError(f"arc {self.id!r} is not incident to {v!r}")


@dataclass(frozen=True)
class MwGraph:
    """Finite multigraph with vertex weights, arc weights and a magnetic potential.

    Vertex and arc order is part of the data: matrices are assembled in this
    order and all deterministic tie-breaks follow it.
    """

    vertices: tuple[Vertex, ...] = ()
    arcs: tuple[Arc, ...] = ()
    _vertex_pos: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    _arc_pos: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        arcs = tuple(self.arcs)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arcs", arcs)

        vertex_pos: dict[str, int] = {}
        for i, v in enumerate(vertices):
            if v.id in vertex_pos:
                raise GraphValidationError(f"duplicate vertex id {v.id!r}")
            vertex_pos[v.id] = i
        arc_pos: dict[str, int] = {}
        for j, a in enumerate(arcs):
            if a.id in arc_pos:
                raise GraphValidationError(f"duplicate arc id {a.id!r}")
            for end in (a.tail, a.head):
                if end not in vertex_pos:
                    raise GraphValidationError(f"arc {a.id!r} references unknown vertex {end!r}")
            arc_pos[a.id] = j
        object.__setattr__(self, "_vertex_pos", vertex_pos)
        object.__setattr__(self, "_arc_pos", arc_pos)

    # ------------------------------------------------------------------
    # construction helpers
    # ------------------------------------------------------------------
    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Sequence],
        weights: str = "combinatorial",
        vertex_order: Optional[Sequence[str]] = None,
    ) -> "MwGraph":
        """Build a graph from ``(tail, head[, alpha])`` tuples.

        Arcs are named e1, e2, ... in input order. ``weights`` is either
        "standard" (m(v)=deg(v), m_e=1) or "combinatorial" (all weights 1).
        """
        arcs = []
        seen: dict[str, None] = dict.fromkeys(vertex_order or ())
        for k, edge in enumerate(edges, start=1):
            tail, head = str(edge[0]), str(edge[1])
            alpha = float(edge[2]) if len(edge) > 2 else 0.0
            seen.setdefault(tail)
            seen.setdefault(head)
            arcs.append(Arc(f"e{k}", tail, head, 1.0, alpha))
        g = cls(tuple(Vertex(v) for v in seen), tuple(arcs))
        return apply_weight_scheme(g, weights)

    # ------------------------------------------------------------------
    # lookups
    # ------------------------------------------------------------------
    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_arcs(self) -> int:
        return len(self.arcs)

    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @property
    def arc_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.arcs)

    def has_vertex(self, vid: str) -> bool:
        return vid in self._vertex_pos

    def has_arc(self, aid: str) -> bool:
        return aid in self._arc_pos

    def vertex_position(self, vid: str) -> int:
        try:
            return self._vertex_pos[vid]
        except KeyError:
            raise UnknownIdError(f"unknown vertex id {vid!r}") from None

    def arc_position(self, aid: str) -> int:
        try:
            return self._arc_pos[aid]
        except KeyError:
            raise UnknownIdError(f"unknown arc id {aid!r}") from None

    def vertex(self, vid: str) -> Vertex:
        return self.vertices[self.vertex_position(vid)]

    def arc(self, aid: str) -> Arc:
        return self.arcs[self.arc_position(aid)]

    def incident_arcs(self, vid: str) -> tuple[Arc, ...]:
        """E_v: arcs with ``vid`` as tail or head (a loop appears once)."""
        self.vertex_position(vid)
        return tuple(a for a in self.arcs if a.tail == vid or a.head == vid)

    def check_vertices(self, ids: Iterable[str]) -> frozenset[str]:
        ids = frozenset(ids)
        for vid in sorted(ids):
            self.vertex_position(vid)
        return ids

    def check_arcs(self, ids: Iterable[str]) -> frozenset[str]:
        ids = frozenset(ids)
        for aid in sorted(ids):
            self.arc_position(aid)
        return ids

    # ------------------------------------------------------------------
    # array views (fresh copies; callers may mutate)
    # ------------------------------------------------------------------
    def vertex_weights(self) -> np.ndarray:
        return np.array([v.weight for v in self.vertices], dtype=float)

    def arc_weights(self) -> np.ndarray:
        return np.array([a.weight for a in self.arcs], dtype=float)

    def alphas(self) -> np.ndarray:
        return np.array([a.alpha for a in self.arcs], dtype=float)

    def tails(self) -> np.ndarray:
        return np.array([self._vertex_pos[a.tail] for a in self.arcs], dtype=np.intp)

    def heads(self) -> np.ndarray:
        return np.array([self._vertex_pos[a.head] for a in self.arcs], dtype=np.intp)

    # ------------------------------------------------------------------
    # derived graphs
    # ------------------------------------------------------------------
    def with_arcs(self, arcs: Iterable[Arc]) -> "MwGraph":
        return MwGraph(self.vertices, tuple(arcs))

    def with_potential(self, alpha: Mapping[str, float]) -> "MwGraph":
        """Replace α on the named arcs; other arcs keep their potential."""
        self.check_arcs(alpha)
        return self.with_arcs(
            Arc(a.id, a.tail, a.head, a.weight, alpha[a.id]) if a.id in alpha else a
            for a in self.arcs
        )


# ----------------------------------------------------------------------
# degree and relative weight
# ----------------------------------------------------------------------
def degree(g: MwGraph, v: str) -> int:
    """|E_v|, with every loop at ``v`` counted twice."""
    g.vertex_position(v)
    return sum((a.tail == v) + (a.head == v) for a in g.arcs)


def degrees(g: MwGraph) -> np.ndarray:
    deg = np.zeros(g.n_vertices, dtype=np.int64)
    np.add.at(deg, g.tails(), 1)
    np.add.at(deg, g.heads(), 1)
    return deg


def relative_weight(g: MwGraph, v: str) -> float:
    """ρ(v) = m(E_v)/m(v); a loop's weight counts twice."""
    i = g.vertex_position(v)
    total = sum(a.weight * ((a.tail == v) + (a.head == v)) for a in g.arcs)
    return total / g.vertices[i].weight


def relative_weights(g: MwGraph) -> np.ndarray:
    """Vector of ρ(v) in vertex order."""
    incident = np.zeros(g.n_vertices, dtype=float)
    m_e = g.arc_weights()
    np.add.at(incident, g.tails(), m_e)
    np.add.at(incident, g.heads(), m_e)
    return incident / g.vertex_weights()


def rho_infinity(g: MwGraph) -> float:
    """max_v ρ(v); the spectrum of every DML on ``g`` lies in [0, 2ρ∞]."""
    if g.n_vertices == 0:
        raise GraphValidationError("rho_infinity of an empty graph is undefined")
    return float(relative_weights(g).max())


# ----------------------------------------------------------------------
# weight schemes
# ----------------------------------------------------------------------
def with_standard_weights(g: MwGraph) -> MwGraph:
    """m(v) = deg(v), m_e = 1; then ρ ≡ 1 and the spectrum lies in [0, 2]."""
    deg = degrees(g)
    isolated = [g.vertices[i].id for i in np.flatnonzero(deg == 0)]
    if isolated:
        raise GraphValidationError(f"standard weights need positive degrees; isolated: {isolated}")
    return MwGraph(
        tuple(Vertex(v.id, float(d)) for v, d in zip(g.vertices, deg)),
        tuple(Arc(a.id, a.tail, a.head, 1.0, a.alpha) for a in g.arcs),
    )


def with_combinatorial_weights(g: MwGraph) -> MwGraph:
    """All weights 1; then ρ(v) = deg(v)."""
    return MwGraph(
        tuple(Vertex(v.id, 1.0) for v in g.vertices),
        tuple(Arc(a.id, a.tail, a.head, 1.0, a.alpha) for a in g.arcs),
    )


def apply_weight_scheme(g: MwGraph, scheme: str) -> MwGraph:
    if scheme == "standard":
        return with_standard_weights(g)
    if scheme == "combinatorial":
        return with_combinatorial_weights(g)
    if scheme == "given":
        return g
    raise GraphValidationError(f"unknown weight scheme {scheme!r}")


def has_standard_weights(g: MwGraph, rel_tol: float = 1e-12) -> bool:
    deg = degrees(g)
    if any(not math.isclose(a.weight, 1.0, rel_tol=rel_tol) for a in g.arcs):
        return False
    return all(math.isclose(v.weight, float(d), rel_tol=rel_tol) for v, d in zip(g.vertices, deg))


__all__ = [
    "TWO_PI",
    "Vertex",
    "Arc",
    "MwGraph",
    "reduce_angle",
    "angle_distance",
    "degree",
    "degrees",
    "relative_weight",
    "relative_weights",
    "rho_infinity",
    "with_standard_weights",
    "with_combinatorial_weights",
    "apply_weight_scheme",
    "has_standard_weights",
]
