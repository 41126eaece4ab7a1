"""
Graph core: magnetic weighted multigraphs.

Components:
- MwGraph, Vertex, Arc: immutable graph data with weights and potential
- degree / relative_weight / rho_infinity: local and global weight measures
- betti, is_bipartite, spanning trees: topology (networkx backed)
- gauge_reduce, cycle_fluxes, walk_flux: cohomology of magnetic potentials
- virtualize_arcs, virtualize_vertices, neighborhoods: bracketing inputs
"""

from src.graph.mwgraph import (
    TWO_PI,
    Arc,
    MwGraph,
    Vertex,
    angle_distance,
    apply_weight_scheme,
    degree,
    degrees,
    has_standard_weights,
    reduce_angle,
    relative_weight,
    relative_weights,
    rho_infinity,
    with_combinatorial_weights,
    with_standard_weights,
)
from src.graph.topology import betti, is_bipartite, is_connected, spanning_tree_arcs, to_networkx
from src.graph.gauge import GaugeResult, Walk, cycle_fluxes, gauge_reduce, gauge_transform, walk_flux
from src.graph.virtualize import (
    DirichletGraph,
    arcs_between,
    connecting_arcs,
    is_neighborhood,
    minimal_neighborhood,
    virtualize_arcs,
    virtualize_vertices,
)

__all__ = [
    "TWO_PI",
    "Arc",
    "MwGraph",
    "Vertex",
    "angle_distance",
    "apply_weight_scheme",
    "degree",
    "degrees",
    "has_standard_weights",
    "reduce_angle",
    "relative_weight",
    "relative_weights",
    "rho_infinity",
    "with_combinatorial_weights",
    "with_standard_weights",
    "betti",
    "is_bipartite",
    "is_connected",
    "spanning_tree_arcs",
    "to_networkx",
    "GaugeResult",
    "Walk",
    "cycle_fluxes",
    "gauge_reduce",
    "gauge_transform",
    "walk_flux",
    "DirichletGraph",
    "arcs_between",
    "connecting_arcs",
    "is_neighborhood",
    "minimal_neighborhood",
    "virtualize_arcs",
    "virtualize_vertices",
]
