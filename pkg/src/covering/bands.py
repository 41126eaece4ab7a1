"""
Band structures, covering bracketing and flux sweeps.

The spectrum of the periodic Laplacian is the union over θ ∈ [0, 2π)^d of
the fiber spectra. Sorted fiber eigenvalues are continuous in θ, so the k-th
band is the interval [min_θ λ_k, max_θ λ_k]; it is estimated on a uniform
θ grid. A flux sweep repeats this for the one-parameter family s ↦ β(s)
produced by a model's constant-flux potential.

Usage:
    from src.covering import band_structure, flux_sweep
    bands = band_structure(p, grid=256)
    diagram = flux_sweep(lambda s: constant_flux_potential(p, s), s_grid=64, theta_grid=64)
"""
from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

from src.graph import minimal_neighborhood
from src.spectra import (
    Bracketing,
    DmlAssembler,
    Interval,
    batch_eigenvalues,
    bracketing,
    check_cost,
    complement,
    kappa_refine,
    merge_intervals,
)
from src.spectra.magnetic import chord_coupling
from src.utils.config import settings
from src.utils.errors import GraphValidationError, NeighborhoodError

from .periodic import PeriodicGraph, connecting_arc_classes

logger = logging.getLogger(__name__)

CHUNK = 2048
Family = Callable[[float], PeriodicGraph]


@dataclass(frozen=True, eq=False)
class BandStructure:
    """Sampled fiber spectra.

    ``bands[i, k]`` is λ_{k+1} at ``theta_grid[i]``; ``resolution`` bounds how
    far a band edge can sit beyond its sampled extreme.
    """

    theta_grid: np.ndarray
    bands: np.ndarray
    band_intervals: tuple[Interval, ...]
    union: tuple[Interval, ...]
    gaps: tuple[Interval, ...]
    ambient: tuple[float, float]
    resolution: float

    @property
    def widths(self) -> np.ndarray:
        return np.array([hi - lo for lo, hi in self.band_intervals])


@dataclass(frozen=True)
class FluxRow:
    s: float
    band_intervals: tuple[Interval, ...]
    gaps: tuple[Interval, ...]


@dataclass(frozen=True)
class FluxDiagram:
    """One row of bands and gaps per flux value s."""

    rows: tuple[FluxRow, ...]
    ambient: tuple[float, float]
    mode: str = "bands"

    @property
    def s_grid(self) -> tuple[float, ...]:
        return tuple(row.s for row in self.rows)


def uniform_grid(points: int) -> np.ndarray:
    return 2.0 * math.pi * np.arange(points) / points


def grid_resolution(p: PeriodicGraph, grid: int) -> float:
    """Largest possible distance of a band edge from its sampled extreme.

    λ_k moves by at most Σ_e |ind(e)|·w_e per unit change of θ (w_e the arc's
    coupling in the symmetrized matrix), and every θ is within π/grid of a
    sample in each coordinate.
    """
    g = p.quotient
    lipschitz = sum(
        chord_coupling(g, aid) * float(np.sum(np.abs(p.index[aid]))) for aid in connecting_arc_classes(p)
    )
    return lipschitz * math.pi / grid


def _theta_lattice(rank: int, grid: int) -> np.ndarray:
    axis = uniform_grid(grid)
    return np.array(list(itertools.product(axis, repeat=rank)), dtype=float).reshape(-1, rank)


def _sample(p: PeriodicGraph, thetas: np.ndarray) -> np.ndarray:
    assembler = DmlAssembler(p.quotient)
    beta = p.quotient.alphas()
    index = p.index_matrix().astype(float)
    values = []
    for start in range(0, thetas.shape[0], CHUNK):
        block = thetas[start:start + CHUNK]
        alphas = beta[None, :] + block @ index.T
        values.append(batch_eigenvalues(assembler.stack(alphas)))
    return np.concatenate(values, axis=0)


def _summarize(p: PeriodicGraph, grid: int, thetas: np.ndarray, values: np.ndarray) -> BandStructure:
    ambient = (0.0, DmlAssembler(p.quotient).ambient_max)
    intervals = tuple((float(lo), float(hi)) for lo, hi in zip(values.min(axis=0), values.max(axis=0)))
    union = merge_intervals(intervals, settings.merge_tol)
    gaps = complement(union, ambient, settings.merge_tol)
    values.setflags(write=False)
    thetas.setflags(write=False)
    return BandStructure(
        theta_grid=thetas,
        bands=values,
        band_intervals=intervals,
        union=tuple(union),
        gaps=tuple(gaps),
        ambient=ambient,
        resolution=grid_resolution(p, grid),
    )


def band_structure(p: PeriodicGraph, grid: int, refine: bool = False) -> BandStructure:
    """Sample θ on the uniform grid^d lattice of [0, 2π)^d.

    With ``refine`` the grid is doubled once; a warning is logged when a band
    endpoint moves by more than ``band_refine_tol``.
    """
    if grid < 2:
        raise GraphValidationError("θ grid needs at least 2 points per dimension")
    check_cost((2 * grid if refine else grid) ** p.rank, p.quotient.n_vertices, "band_structure")
    thetas = _theta_lattice(p.rank, grid)
    result = _summarize(p, grid, thetas, _sample(p, thetas))
    logger.debug("band structure: %d θ samples, %d gaps", thetas.shape[0], len(result.gaps))
    if not refine:
        return result

    finer_thetas = _theta_lattice(p.rank, 2 * grid)
    finer = _summarize(p, 2 * grid, finer_thetas, _sample(p, finer_thetas))
    drift = float(np.max(np.abs(np.array(finer.band_intervals) - np.array(result.band_intervals)), initial=0.0))
    if drift > settings.band_refine_tol:
        logger.warning("band endpoints moved by %.3e after grid doubling to %d", drift, 2 * grid)
    return finer


def covering_bracketing(
    p: PeriodicGraph,
    vertices: Optional[Iterable[str]] = None,
    arcs: Optional[Iterable[str]] = None,
) -> Bracketing:
    """Bracketing of the quotient with E0 = connecting arcs (or a superset).

    Uses β only; fiber potentials agree with β off E0, so the result holds
    for every θ at once.
    """
    connecting = connecting_arc_classes(p)
    arc_set = connecting if arcs is None else p.quotient.check_arcs(arcs)
    if not connecting <= arc_set:
        raise NeighborhoodError(
            f"virtualized arcs must include every connecting arc; missing {sorted(connecting - arc_set)}"
        )
    vertex_set = minimal_neighborhood(p.quotient, arc_set) if vertices is None else frozenset(vertices)
    return bracketing(p.quotient, arc_set, vertex_set)


def _resolve_grid(s_grid: Union[int, Sequence[float]]) -> list[float]:
    if isinstance(s_grid, int):
        if s_grid < 1:
            raise GraphValidationError("flux grid needs at least one point")
        return uniform_grid(s_grid).tolist()
    return [float(s) for s in s_grid]


def _run_rows(row_fn: Callable[[float], FluxRow], s_values: list[float]) -> tuple[FluxRow, ...]:
    if settings.max_workers <= 1:
        return tuple(row_fn(s) for s in s_values)
    # executor.map yields in submission order, so rows stay keyed by grid index
    with ThreadPoolExecutor(max_workers=settings.max_workers) as pool:
        return tuple(pool.map(row_fn, s_values))


def flux_sweep(family: Family, s_grid: Union[int, Sequence[float]], theta_grid: int) -> FluxDiagram:
    """Band structure for each s; one row per s in grid order."""
    s_values = _resolve_grid(s_grid)
    probe = family(s_values[0])
    check_cost(len(s_values) * theta_grid ** probe.rank, probe.quotient.n_vertices, "flux_sweep")

    def row(s: float) -> FluxRow:
        bands = band_structure(family(s), theta_grid)
        return FluxRow(s, bands.band_intervals, bands.gaps)

    rows = _run_rows(row, s_values)
    ambient = (0.0, DmlAssembler(probe.quotient).ambient_max)
    logger.info("flux sweep: %d rows x %d θ samples", len(rows), theta_grid ** probe.rank)
    return FluxDiagram(rows, ambient, "bands")


def bracket_sweep(
    family: Family,
    s_grid: Union[int, Sequence[float]],
    kappa: bool = False,
    vertices: Optional[Iterable[str]] = None,
    arcs: Optional[Iterable[str]] = None,
) -> FluxDiagram:
    """Bracketing union (optionally κ-refined) for each s."""
    s_values = _resolve_grid(s_grid)
    vertices = None if vertices is None else frozenset(vertices)
    arcs = None if arcs is None else frozenset(arcs)

    def row(s: float) -> FluxRow:
        b = covering_bracketing(family(s), vertices, arcs)
        if kappa:
            b = kappa_refine(b)
        return FluxRow(s, b.union, b.gaps)

    rows = _run_rows(row, s_values)
    probe = family(s_values[0])
    ambient = (0.0, DmlAssembler(probe.quotient).ambient_max)
    return FluxDiagram(rows, ambient, "bracket")


__all__ = [
    "BandStructure",
    "FluxRow",
    "FluxDiagram",
    "Family",
    "band_structure",
    "bracket_sweep",
    "covering_bracketing",
    "flux_sweep",
    "grid_resolution",
    "uniform_grid",
]
