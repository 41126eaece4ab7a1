"""
Example graphs and their constant-flux families.

Components:
- ModelSpec, build: polyacetylene, armchair and zigzag nanoribbons, cycles, Z
- flux_family: s ↦ model with constant flux s, for flux sweeps
- constant_flux_potential, verify_constant_flux: flux bookkeeping on the cover
"""

from src.models.flux import (
    constant_flux_potential,
    designated_cycles,
    flux_multipliers,
    verify_constant_flux,
)
from src.models.builders import (
    Model,
    ModelName,
    ModelSpec,
    armchair_quotient,
    build,
    cycle_graph,
    flux_family,
    polyacetylene_quotient,
    z_lattice_quotient,
    zigzag_quotient,
)

__all__ = [
    "constant_flux_potential",
    "designated_cycles",
    "flux_multipliers",
    "verify_constant_flux",
    "Model",
    "ModelName",
    "ModelSpec",
    "armchair_quotient",
    "build",
    "cycle_graph",
    "flux_family",
    "polyacetylene_quotient",
    "z_lattice_quotient",
    "zigzag_quotient",
]
