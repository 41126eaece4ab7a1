"""
Spectral bracketing.

Virtualizing an arc set E0 gives a spectrally smaller operator Δ⁻, and
virtualizing a neighborhood V0 of E0 gives a spectrally larger Δ⁺. Every
operator in between, in particular every fiber operator of a covering whose
connecting arcs are in E0, has λ_k inside J_k = [λ_k(Δ⁻), λ_k(Δ⁺)], where Δ⁺
has fewer eigenvalues and is padded with 2ρ∞ of the original graph.
"""
from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from src.graph import (
    MwGraph,
    has_standard_weights,
    is_bipartite,
    is_neighborhood,
    rho_infinity,
    virtualize_arcs,
    virtualize_vertices,
)
from src.utils.config import settings
from src.utils.errors import CriterionError, InvariantViolation, NeighborhoodError

from .assembly import assemble_dirichlet_dml, assemble_dml
from .eigensolver import eigenvalues
from .intervals import Interval, complement, intersect_unions, merge_intervals, reflect, split_isolated
from .spectrum import Spectrum, spectrally_leq

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Bracketing:
    """Bracketing intervals J_k with their union and gap complement.

    ``padded_from`` is n⁺, the number of genuine Δ⁺ eigenvalues: J_k for
    k > n⁺ ends at the padding value 2ρ∞. ``union`` is merged and includes
    degenerate intervals; ``isolated_points`` lists those separately.
    """

    intervals: tuple[Interval, ...]
    padded_from: int
    union: tuple[Interval, ...]
    isolated_points: tuple[float, ...]
    gaps: tuple[Interval, ...]
    ambient: tuple[float, float]
    lower: Spectrum
    upper: Spectrum
    source: MwGraph
    virtualized_arcs: frozenset[str]
    virtualized_vertices: frozenset[str]
    refined: bool = False

    @property
    def proper_union(self) -> tuple[Interval, ...]:
        """The union without its isolated points."""
        return tuple(split_isolated(self.union, settings.merge_tol)[0])

    def to_dict(self) -> dict:
        return {
            "intervals": [list(j) for j in self.intervals],
            "union": [list(j) for j in self.union],
            "gaps": [list(j) for j in self.gaps],
            "isolated_points": list(self.isolated_points),
            "padded_from": self.padded_from,
            "ambient": list(self.ambient),
            "refined": self.refined,
        }


def _summarize(union: list[Interval], ambient: tuple[float, float]) -> dict:
    tol = settings.merge_tol
    _, points = split_isolated(union, tol)
    return {
        "union": tuple(union),
        "isolated_points": tuple(points),
        "gaps": tuple(complement(union, ambient, tol)),
    }


def spectral_order_chain(
    g: MwGraph, arcs: Iterable[str], vertices: Iterable[str]
) -> tuple[Spectrum, Spectrum, Spectrum]:
    """Spectra of Δ⁻, Δ and padded Δ⁺; raises unless λ(Δ⁻) ≤ λ(Δ) ≤ λ(Δ⁺)."""
    arc_set = g.check_arcs(arcs)
    vertex_set = g.check_vertices(vertices)
    pad = 2.0 * rho_infinity(g)
    lower = eigenvalues(assemble_dml(virtualize_arcs(g, arc_set)))
    middle = eigenvalues(assemble_dml(g))
    upper = eigenvalues(assemble_dirichlet_dml(virtualize_vertices(g, vertex_set)))
    padded = Spectrum(upper.padded(g.n_vertices, pad), (0.0, pad))
    if not (spectrally_leq(lower, middle, pad) and spectrally_leq(middle, padded, pad)):
        raise InvariantViolation("spectral order chain λ(Δ⁻) ≤ λ(Δ) ≤ λ(Δ⁺) violated")
    return lower, middle, padded


def bracketing(g: MwGraph, arcs: Iterable[str], vertices: Iterable[str]) -> Bracketing:
    arc_set = g.check_arcs(arcs)
    vertex_set = g.check_vertices(vertices)
    if not is_neighborhood(g, arc_set, vertex_set):
        raise NeighborhoodError(
            f"vertices {sorted(vertex_set)} do not touch every arc of {sorted(arc_set)}"
        )
    pad = 2.0 * rho_infinity(g)
    ambient = (0.0, pad)

    lower = eigenvalues(assemble_dml(virtualize_arcs(g, arc_set)))
    upper = eigenvalues(assemble_dirichlet_dml(virtualize_vertices(g, vertex_set)))
    if not spectrally_leq(lower, upper, pad):
        raise InvariantViolation("virtualized arcs are not spectrally below virtualized vertices")

    hi = upper.padded(len(lower), pad)
    # lo <= hi up to solver noise; clamp so every J_k is a valid interval
    hi = np.maximum(hi, lower.values)
    intervals = tuple((float(lo), float(h)) for lo, h in zip(lower.values, hi))
    union = merge_intervals(intervals, settings.merge_tol)
    logger.debug(
        "bracketing: |E0|=%d |V0|=%d, %d intervals merged into %d",
        len(arc_set), len(vertex_set), len(intervals), len(union),
    )
    return Bracketing(
        intervals=intervals,
        padded_from=len(upper),
        lower=lower,
        upper=upper,
        ambient=ambient,
        source=g,
        virtualized_arcs=arc_set,
        virtualized_vertices=vertex_set,
        **_summarize(union, ambient),
    )


def kappa_refine(b: Bracketing) -> Bracketing:
    """Intersect the union with its mirror image under κ(λ) = 2 − λ.

    Valid for bipartite graphs with standard weights, whose spectra are
    symmetric about 1 for every magnetic potential.
    """
    if is_bipartite(b.source) is None:
        raise CriterionError("κ refinement needs a bipartite graph")
    if not has_standard_weights(b.source):
        raise CriterionError("κ refinement needs standard weights (m(v) = deg(v), m_e = 1)")
    mirrored = merge_intervals(reflect(b.union, 1.0), settings.merge_tol)
    refined = intersect_unions(list(b.union), mirrored, settings.merge_tol)
    logger.debug("κ refinement: %d -> %d pieces", len(b.union), len(refined))
    return dataclasses.replace(b, refined=True, **_summarize(refined, b.ambient))


def gap_set(x: Union[Spectrum, Bracketing], min_length: Optional[float] = None) -> list[Interval]:
    """Maximal open gaps of the ambient interval missing the spectrum or the union."""
    tol = settings.merge_tol if min_length is None else min_length
    if isinstance(x, Bracketing):
        return complement(x.union, x.ambient, tol)
    return complement([(v, v) for v in x.values], x.ambient, tol)


def gap_measure_lower_bound(b: Bracketing) -> float:
    """Σ_k (λ_{k+1}(Δ⁻) − λ_k(Δ⁺)) over consecutive intervals.

    The lower endpoints and the padded upper endpoints are both
    nondecreasing, so a positive value forces at least one gap between some
    J_k and J_{k+1}.
    """
    lo = np.array([j[0] for j in b.intervals])
    hi = np.array([j[1] for j in b.intervals])
    return float(np.sum(lo[1:] - hi[:-1]))


__all__ = [
    "Bracketing",
    "bracketing",
    "kappa_refine",
    "gap_set",
    "gap_measure_lower_bound",
    "spectral_order_chain",
]
