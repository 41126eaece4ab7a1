"""
Z^d-periodic graphs given by a quotient and an arc index.

The covering graph is never built. A quotient arc e with index z ∈ Z^d joins
its tail in cell ξ to its head in cell ξ + z; β is the periodic potential.
Restricting the periodic Laplacian to θ-quasiperiodic functions (character
χ_θ(γ) = e^{iθ·γ}) leaves the quotient Laplacian with potential
α_e = β_e + θ·ind(e), the fiber operator at θ.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

from src.graph import Arc, MwGraph, Vertex, angle_distance, reduce_angle, walk_flux
from src.graph.topology import require_connected
from src.spectra import Spectrum, assemble_dml, eigenvalues
from src.utils.errors import GraphValidationError

logger = logging.getLogger(__name__)

LIFT_TOL = 1e-9


@dataclass(frozen=True)
class FluxCycle:
    """A closed walk of the quotient with zero net index, i.e. a cycle of the cover.

    ``orientation`` (±1) fixes the sign with which a constant flux s is
    carried, so that all cycles agree with one orientation of the plane.
    """

    steps: tuple[tuple[str, int], ...]
    orientation: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple((str(a), int(s)) for a, s in self.steps))
        if self.orientation not in (1, -1):
            raise GraphValidationError("cycle orientation must be +1 or -1")

    @property
    def arcs(self) -> tuple[str, ...]:
        return tuple(aid for aid, _ in self.steps)


def integer_left_inverse(rows: Sequence[Sequence[int]], rank: int) -> Optional[np.ndarray]:
    """Integer U (rank x len(rows)) with U·rows = Id, or None if the rows do not generate Z^rank.

    Integer row reduction (Hermite style) tracking the row operations.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    t = [[int(i == j) for j in range(m)] for i in range(m)]

    def combine(target: int, source: int, q: int) -> None:
        a[target] = [x - q * y for x, y in zip(a[target], a[source])]
        t[target] = [x - q * y for x, y in zip(t[target], t[source])]

    for c in range(rank):
        while True:
            live = [r for r in range(c, m) if a[r][c] != 0]
            if not live:
                return None
            pivot = min(live, key=lambda r: abs(a[r][c]))
            others = [r for r in live if r != pivot]
            if not others:
                break
            for r in others:
                combine(r, pivot, a[r][c] // a[pivot][c])
        a[c], a[pivot] = a[pivot], a[c]
        t[c], t[pivot] = t[pivot], t[c]
        if a[c][c] < 0:
            a[c] = [-x for x in a[c]]
            t[c] = [-x for x in t[c]]
        if a[c][c] != 1:
            return None
    for c in range(rank - 1, -1, -1):
        for r in range(c):
            if a[r][c]:
                combine(r, c, a[r][c])
    return np.array(t[:rank], dtype=np.int64)


@dataclass(frozen=True)
class PeriodicGraph:
    """Quotient graph with arc index map; the quotient's α is the periodic β."""

    quotient: MwGraph
    index: Mapping[str, tuple[int, ...]]
    rank: int = 1
    flux_cycles: tuple[FluxCycle, ...] = ()
    _left_inverse: np.ndarray = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise GraphValidationError("group rank must be at least 1")
        g = self.quotient
        index: dict[str, tuple[int, ...]] = {}
        for aid in g.arc_ids:
            z = tuple(int(x) for x in self.index.get(aid, (0,) * self.rank))
            if len(z) != self.rank:
                raise GraphValidationError(f"arc {aid!r}: index {z} has length {len(z)}, expected {self.rank}")
            index[aid] = z
        g.check_arcs(self.index)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "flux_cycles", tuple(self.flux_cycles))
        require_connected(g, "periodic quotient")

        inverse = integer_left_inverse([index[aid] for aid in g.arc_ids], self.rank)
        if inverse is None:
            raise GraphValidationError(f"arc indices do not generate Z^{self.rank}")
        object.__setattr__(self, "_left_inverse", inverse)

        for cycle in self.flux_cycles:
            walk_flux(g, cycle.steps)  # validates closure
            net = np.sum([sign * np.array(index[aid]) for aid, sign in cycle.steps], axis=0)
            if np.any(net != 0):
                raise GraphValidationError(f"flux cycle {cycle.arcs} has net index {tuple(net)}; not a cycle of the cover")

    def index_matrix(self) -> np.ndarray:
        """|E| x d integer matrix of arc indices in arc order."""
        return np.array([self.index[aid] for aid in self.quotient.arc_ids], dtype=np.int64).reshape(
            self.quotient.n_arcs, self.rank
        )

    def with_quotient(self, quotient: MwGraph) -> "PeriodicGraph":
        return PeriodicGraph(quotient, self.index, self.rank, self.flux_cycles)

    @property
    def max_index(self) -> int:
        return int(np.max(np.abs(self.index_matrix()), initial=0))


def connecting_arc_classes(p: PeriodicGraph) -> frozenset[str]:
    """Arcs with nonzero index: the classes of arcs leaving a fundamental domain."""
    return frozenset(aid for aid, z in p.index.items() if any(z))


def _theta_vector(p: PeriodicGraph, theta) -> np.ndarray:
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    if theta.shape != (p.rank,):
        raise GraphValidationError(f"θ must have {p.rank} components, got {theta.shape}")
    if not np.all(np.isfinite(theta)):
        raise GraphValidationError("θ must be finite")
    return np.mod(theta, 2.0 * np.pi)


def fiber_potential(p: PeriodicGraph, theta) -> MwGraph:
    """Quotient with α_e = β_e + θ·ind(e) mod 2π."""
    theta = _theta_vector(p, theta)
    shifts = p.index_matrix() @ theta
    return p.quotient.with_arcs(
        Arc(a.id, a.tail, a.head, a.weight, a.alpha + shift) if any(p.index[a.id]) else a
        for a, shift in zip(p.quotient.arcs, shifts)
    )


def fiber_spectrum(p: PeriodicGraph, theta) -> Spectrum:
    return eigenvalues(assemble_dml(fiber_potential(p, theta)))


def has_lifting_property(p: PeriodicGraph, alpha: Mapping[str, float]) -> Optional[tuple[float, ...]]:
    """θ with α = β + θ·ind arc-wise (mod 2π), or None if α is no fiber potential.

    With U an integer left inverse of the index matrix, any solution has
    θ ≡ U(α − β) mod 2π, so there is only one candidate to check.
    """
    g = p.quotient
    g.check_arcs(alpha)
    missing = [aid for aid in g.arc_ids if aid not in alpha]
    if missing:
        raise GraphValidationError(f"potential lacks arcs {missing}")
    diff = np.array([alpha[a.id] - a.alpha for a in g.arcs])
    theta = np.mod(p._left_inverse @ diff, 2.0 * np.pi)
    shifts = p.index_matrix() @ theta
    for a, shift in zip(g.arcs, shifts):
        if angle_distance(reduce_angle(a.alpha + shift), reduce_angle(alpha[a.id])) > LIFT_TOL:
            return None
    return tuple(float(x) for x in theta)


def layer_name(name: str, layer: int) -> str:
    return f"{name}@{layer}"


def unfold_truncation(p: PeriodicGraph, radius: int) -> MwGraph:
    """Finite piece of the cover: cells -radius..radius, free boundary.

    Arcs whose far cell lies outside the piece are dropped; weights and β are
    copied from the quotient.
    """
    if p.rank != 1:
        raise GraphValidationError("truncation is implemented for Z-periodic graphs only")
    if radius < 0:
        raise GraphValidationError("radius must be nonnegative")
    g = p.quotient
    layers = range(-radius, radius + 1)
    vertices = [Vertex(layer_name(v.id, j), v.weight) for j in layers for v in g.vertices]
    arcs = []
    for j in layers:
        for a in g.arcs:
            far = j + p.index[a.id][0]
            if -radius <= far <= radius:
                arcs.append(Arc(layer_name(a.id, j), layer_name(a.tail, j), layer_name(a.head, far), a.weight, a.alpha))
    logger.debug("truncation radius %d: %d vertices, %d arcs", radius, len(vertices), len(arcs))
    return MwGraph(tuple(vertices), tuple(arcs))


__all__ = [
    "FluxCycle",
    "PeriodicGraph",
    "integer_left_inverse",
    "connecting_arc_classes",
    "fiber_potential",
    "fiber_spectrum",
    "has_lifting_property",
    "layer_name",
    "unfold_truncation",
]
