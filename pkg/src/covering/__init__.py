"""
Periodic covering graphs.

Components:
- PeriodicGraph, FluxCycle: quotient + index representation of a Z^d cover
- fiber_potential / fiber_spectrum: Floquet fibers at a character θ
- has_lifting_property: recognize fiber potentials among quotient potentials
- unfold_truncation: finite piece of a Z-periodic cover
- band_structure, covering_bracketing, flux_sweep, bracket_sweep: band and gap pictures
"""

from src.covering.periodic import (
    FluxCycle,
    PeriodicGraph,
    connecting_arc_classes,
    fiber_potential,
    fiber_spectrum,
    has_lifting_property,
    integer_left_inverse,
    layer_name,
    unfold_truncation,
)
from src.covering.bands import (
    BandStructure,
    Family,
    FluxDiagram,
    FluxRow,
    band_structure,
    bracket_sweep,
    covering_bracketing,
    flux_sweep,
    grid_resolution,
    uniform_grid,
)

__all__ = [
    "FluxCycle",
    "PeriodicGraph",
    "connecting_arc_classes",
    "fiber_potential",
    "fiber_spectrum",
    "has_lifting_property",
    "integer_left_inverse",
    "layer_name",
    "unfold_truncation",
    "BandStructure",
    "Family",
    "FluxDiagram",
    "FluxRow",
    "band_structure",
    "bracket_sweep",
    "covering_bracketing",
    "flux_sweep",
    "grid_resolution",
    "uniform_grid",
]
