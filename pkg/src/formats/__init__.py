"""
File formats.

Components:
- schemas: pydantic documents for graphs, spectra, bracketings, certificates and errors
- graph_json: graph JSON round trip and rounded result JSON
- tables: BandStructure and FluxDiagram CSV
"""

from src.formats.schemas import (
    ArcRecord,
    BracketingDocument,
    DeltaDocument,
    ErrorDocument,
    FluxCycleRecord,
    GraphDocument,
    SpectrumDocument,
    VertexRecord,
)
from src.formats.graph_json import (
    GraphLike,
    dump_graph,
    from_document,
    load_graph,
    parse_graph,
    result_json,
    to_document,
)
from src.formats.tables import band_structure_csv, flux_diagram_csv, parse_flux_diagram, read_flux_diagram

__all__ = [
    "ArcRecord",
    "BracketingDocument",
    "DeltaDocument",
    "ErrorDocument",
    "FluxCycleRecord",
    "GraphDocument",
    "SpectrumDocument",
    "VertexRecord",
    "GraphLike",
    "dump_graph",
    "from_document",
    "load_graph",
    "parse_graph",
    "result_json",
    "to_document",
    "band_structure_csv",
    "flux_diagram_csv",
    "parse_flux_diagram",
    "read_flux_diagram",
]
