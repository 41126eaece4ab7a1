"""
Magnetic spectral gaps: gaps that survive every magnetic potential.

After gauge reduction a potential only matters through its values on the b
chords of a spanning tree, so the union of all magnetic spectra is the union
over the b-torus of chord angles. The torus is sampled on a uniform grid;
per sorted index k the sampled band is [min, max]. Each λ_k moves by at most
Σ_c w_c·|Δα_c| when the chord angles move (w_c is the chord's coupling), so
gaps narrower than twice that bound at grid spacing are not trusted.
"""
from __future__ import annotations

import itertools
import logging
import math

import numpy as np

from src.graph import MwGraph, gauge_reduce
from src.graph.topology import require_connected
from src.utils.config import settings
from src.utils.errors import CostGuardError, GraphValidationError

from .assembly import DmlAssembler
from .eigensolver import batch_eigenvalues
from .intervals import Interval, complement, merge_intervals

logger = logging.getLogger(__name__)

CHUNK = 4096


def check_cost(points: int, dimension: int, what: str) -> None:
    """Raise CostGuardError when points·n³ exceeds the configured cap."""
    cost = float(points) * float(dimension) ** 3
    if cost > settings.cost_cap:
        raise CostGuardError(
            f"{what}: {points} grid points at dimension {dimension} cost {cost:.3e} > cap {settings.cost_cap:.3e}"
        )


def chord_coupling(g: MwGraph, aid: str) -> float:
    a = g.arc(aid)
    if a.is_loop:
        return 2.0 * a.weight / g.vertex(a.tail).weight
    return a.weight / math.sqrt(g.vertex(a.tail).weight * g.vertex(a.head).weight)


def magnetic_gap_set(g: MwGraph, grid: int) -> list[Interval]:
    if grid < 1:
        raise GraphValidationError("grid must be positive")
    require_connected(g, "magnetic_gap_set")
    reduced = gauge_reduce(g)
    chords = [aid for aid in g.arc_ids if aid in reduced.support]
    b = len(chords)
    if b > settings.max_magnetic_betti:
        raise CostGuardError(
            f"magnetic_gap_set samples a {b}-torus; at most {settings.max_magnetic_betti} supported"
        )
    points = grid ** b
    check_cost(points, g.n_vertices, "magnetic_gap_set")

    base = reduced.apply(g)
    assembler = DmlAssembler(base)
    columns = [base.arc_position(aid) for aid in chords]
    samples = 2.0 * math.pi * np.arange(grid) / grid

    lo = np.full(g.n_vertices, np.inf)
    hi = np.full(g.n_vertices, -np.inf)
    corners = itertools.product(samples, repeat=b)
    while True:
        block = list(itertools.islice(corners, CHUNK))
        if not block:
            break
        alphas = np.zeros((len(block), g.n_arcs))
        if b:
            alphas[:, columns] = np.array(block)
        values = batch_eigenvalues(assembler.stack(alphas))
        lo = np.minimum(lo, values.min(axis=0))
        hi = np.maximum(hi, values.max(axis=0))

    resolution = sum(chord_coupling(g, aid) for aid in chords) * math.pi / grid
    union = merge_intervals(zip(lo, hi), settings.merge_tol)
    min_length = max(settings.merge_tol, 2.0 * resolution)
    gaps = complement(union, (0.0, assembler.ambient_max), min_length)
    logger.info(
        "magnetic gaps: b=%d, %d samples, resolution %.3g, %d gaps", b, points, resolution, len(gaps)
    )
    return gaps


__all__ = ["magnetic_gap_set", "check_cost", "chord_coupling"]
