"""
Single-vertex gap criterion.

Virtualize the arcs B at a vertex v0 (W⁻ = g − B) and the vertex itself
(W⁺ = g − {v0}). The gap criterion value

    δ = ρ(v0) − Σ_{e∈B} m_e / m(opposite end of e) − m(B)/m(v0) − λ_1(Δ⁻)

equals Tr Δ⁻ − Tr Δ⁺ − λ_1(Δ⁻); when it is positive the bracketing intervals
cannot cover [0, 2ρ∞], so the covering spectrum has a gap. The standard and
combinatorial variants are the same expression with m(v) = deg(v), m_e = 1
resp. m ≡ 1 substituted, while λ_1 is always computed from the graph given.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Literal

from src.graph import (
    MwGraph,
    degree,
    relative_weight,
    virtualize_arcs,
    virtualize_vertices,
)
from src.utils.config import settings
from src.utils.errors import CriterionError, InvariantViolation

from .assembly import assemble_dirichlet_dml, assemble_dml
from .eigensolver import eigenvalues

logger = logging.getLogger(__name__)

Variant = Literal["general", "standard", "combinatorial"]


@dataclass(frozen=True)
class DeltaCertificate:
    value: float
    lambda_1: float
    variant: str
    vertex: str
    arcs: tuple[str, ...]

    @property
    def certified(self) -> bool:
        return self.value > 0.0

    @property
    def verdict(self) -> str:
        return "gap certified" if self.certified else "no certificate"

    def to_dict(self) -> dict:
        return {
            "delta": self.value,
            "lambda_1": self.lambda_1,
            "variant": self.variant,
            "vertex": self.vertex,
            "arcs": list(self.arcs),
            "verdict": self.verdict,
        }


def _check_star(g: MwGraph, v0: str, arcs: Iterable[str]) -> frozenset[str]:
    g.vertex_position(v0)
    arc_set = g.check_arcs(arcs)
    for aid in sorted(arc_set):
        a = g.arc(aid)
        if a.is_loop:
            raise CriterionError(f"arc {aid!r} is a loop; the criterion excludes loops")
        if v0 not in (a.tail, a.head):
            raise CriterionError(f"arc {aid!r} is not incident to {v0!r}")
    return arc_set


def _lambda_1(g: MwGraph, arc_set: frozenset[str]) -> float:
    return eigenvalues(assemble_dml(virtualize_arcs(g, arc_set)))[0]


def certify(g: MwGraph, v0: str, arcs: Iterable[str], variant: Variant = "general") -> DeltaCertificate:
    arc_set = _check_star(g, v0, arcs)
    lam = _lambda_1(g, arc_set)
    far_ends = [g.arc(aid).other_end(v0) for aid in sorted(arc_set)]

    if variant == "general":
        m_v0 = g.vertex(v0).weight
        m_b = sum(g.arc(aid).weight for aid in arc_set)
        outward = sum(g.arc(aid).weight / g.vertex(w).weight for aid, w in zip(sorted(arc_set), far_ends))
        value = relative_weight(g, v0) - outward - m_b / m_v0 - lam
    elif variant == "standard":
        value = 1.0 - sum(1.0 / degree(g, w) for w in far_ends) - len(arc_set) / degree(g, v0) - lam
    elif variant == "combinatorial":
        value = degree(g, v0) - 2 * len(arc_set) - lam
    else:
        raise CriterionError(f"unknown variant {variant!r}")

    if not arc_set:
        logger.info("δ with B = ∅ is outside the criterion's hypotheses; returned as computed")
    logger.debug("δ(%s, %s) = %.12g (λ_1 = %.12g)", v0, variant, value, lam)
    return DeltaCertificate(float(value), float(lam), variant, v0, tuple(sorted(arc_set)))


def delta_criterion(g: MwGraph, v0: str, arcs: Iterable[str], variant: Variant = "general") -> float:
    return certify(g, v0, arcs, variant).value


def trace_identity_check(g: MwGraph, v0: str, arcs: Iterable[str]) -> float:
    """(Tr Δ⁻ − Tr Δ⁺ − λ_1(Δ⁻)) − δ, traces taken as eigenvalue sums.

    Raises InvariantViolation when the discrepancy exceeds ``trace_tol``.
    A loop at v0 puts -2cos(α)m_e/m(v0) on the diagonal of Δ⁻ only, so the
    identity is checked for loop-free v0.
    """
    arc_set = _check_star(g, v0, arcs)
    if any(a.is_loop for a in g.incident_arcs(v0)):
        raise CriterionError(f"trace identity needs a loop-free vertex; {v0!r} carries a loop")
    lower = eigenvalues(assemble_dml(virtualize_arcs(g, arc_set)))
    upper = eigenvalues(assemble_dirichlet_dml(virtualize_vertices(g, {v0})))
    lhs = float(lower.values.sum() - upper.values.sum() - lower.values[0])
    discrepancy = lhs - delta_criterion(g, v0, arc_set, "general")
    if abs(discrepancy) > settings.trace_tol:
        raise InvariantViolation(f"trace identity off by {discrepancy:.3e}")
    return discrepancy


def trace_weight_check(g: MwGraph) -> float:
    """Σ λ_k(Δ) − Tr Δ, with Tr Δ = Σ_v ρ(v) less the loop phases."""
    spectrum = eigenvalues(assemble_dml(g))
    trace = sum(relative_weight(g, v) for v in g.vertex_ids)
    trace -= sum(2.0 * math.cos(a.alpha) * a.weight / g.vertex(a.tail).weight for a in g.arcs if a.is_loop)
    return float(spectrum.values.sum() - trace)


__all__ = [
    "DeltaCertificate",
    "Variant",
    "certify",
    "delta_criterion",
    "trace_identity_check",
    "trace_weight_check",
]
