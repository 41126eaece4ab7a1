"""
Constant-flux potentials.

Every model lists its flux cycles: closed quotient walks with zero net index,
one per independent cycle of the cover within a period, each with the sign
that matches a fixed orientation of the plane. A potential β_e = c_e·s with
integer multipliers c_e gives every such cycle the flux ±s. The multipliers
are solved cycle by cycle: each cycle designates its lexicographically first
arc not used by an earlier cycle, so earlier fluxes are never disturbed.
"""
from __future__ import annotations

import logging
from typing import Optional

from src.covering import PeriodicGraph, layer_name, unfold_truncation
from src.graph import angle_distance, betti, reduce_angle, walk_flux
from src.utils.errors import ModelError

logger = logging.getLogger(__name__)

FLUX_TOL = 1e-9


def designated_cycles(p: PeriodicGraph) -> list[tuple[tuple[str, int], ...]]:
    """The flux cycles of ``p`` as ``(arc_id, ±1)`` walks."""
    return [cycle.steps for cycle in p.flux_cycles]


def _require_metadata(p: PeriodicGraph) -> None:
    expected = betti(p.quotient) - p.rank
    if len(p.flux_cycles) != expected:
        raise ModelError(
            f"graph carries {len(p.flux_cycles)} flux cycles but its cover has {expected} per period; "
            "constant flux needs the model's cycle metadata"
        )


def flux_multipliers(p: PeriodicGraph) -> dict[str, int]:
    _require_metadata(p)
    multipliers: dict[str, int] = {}
    used: set[str] = set()
    for cycle in p.flux_cycles:
        net = {}
        for aid, sign in cycle.steps:
            net[aid] = net.get(aid, 0) + sign
        fresh = sorted(aid for aid in net if aid not in used and abs(net[aid]) == 1)
        if not fresh:
            raise ModelError(f"flux cycle {cycle.arcs} has no arc of its own to carry the flux")
        designated = fresh[0]
        rest = sum(count * multipliers.get(aid, 0) for aid, count in net.items() if aid != designated)
        multipliers[designated] = (cycle.orientation - rest) * net[designated]
        used.update(net)
    return multipliers


def constant_flux_potential(p: PeriodicGraph, s: float) -> PeriodicGraph:
    """β with flux s through every cycle of the cover (same plane orientation)."""
    multipliers = flux_multipliers(p)
    beta = {aid: reduce_angle(multipliers.get(aid, 0) * s) for aid in p.quotient.arc_ids}
    return p.with_quotient(p.quotient.with_potential(beta))


def _translate(p: PeriodicGraph, steps, start_layer: int, radius: int) -> Optional[list[tuple[str, int]]]:
    layer = start_layer
    out = []
    for aid, sign in steps:
        z = p.index[aid][0]
        tail_layer = layer if sign == 1 else layer - z
        head_layer = tail_layer + z
        if not (-radius <= tail_layer <= radius and -radius <= head_layer <= radius):
            return None
        out.append((layer_name(aid, tail_layer), sign))
        layer = head_layer if sign == 1 else tail_layer
    return out


def verify_constant_flux(p: PeriodicGraph, s: float, radius: int = 2) -> bool:
    """Check the constant-flux potential on a finite piece of the cover.

    Every translate of every flux cycle inside the radius-``radius``
    truncation must carry flux orientation·s, and the translates must be as
    many as the truncation has independent cycles.
    """
    q = constant_flux_potential(p, s)
    truncated = unfold_truncation(q, radius)
    translates = 0
    for cycle in q.flux_cycles:
        for start in range(-radius, radius + 1):
            walk = _translate(q, cycle.steps, start, radius)
            if walk is None:
                continue
            translates += 1
            flux = walk_flux(truncated, walk)
            if angle_distance(flux, reduce_angle(cycle.orientation * s)) > FLUX_TOL:
                logger.warning("cycle %s at layer %d carries %.6g instead of %.6g", cycle.arcs, start, flux, s)
                return False
    expected = betti(truncated)
    if translates != expected:
        logger.warning("%d cycle translates for a truncation of cycle rank %d", translates, expected)
        return False
    return True


__all__ = [
    "designated_cycles",
    "flux_multipliers",
    "constant_flux_potential",
    "verify_constant_flux",
]
