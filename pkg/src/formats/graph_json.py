"""
JSON documents for graphs and results.

Graphs round-trip exactly (floats are written with full precision); result
documents (spectra, bracketings, certificates) carry reals rounded to
``settings.significant_digits``.
"""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Union

from pydantic import BaseModel, ValidationError

from src.covering import FluxCycle, PeriodicGraph
from src.graph import Arc, MwGraph, Vertex, apply_weight_scheme
from src.utils.config import format_real
from src.utils.errors import GraphValidationError

from .schemas import ArcRecord, FluxCycleRecord, GraphDocument, VertexRecord

logger = logging.getLogger(__name__)

GraphLike = Union[MwGraph, PeriodicGraph]


def to_document(obj: GraphLike) -> GraphDocument:
    """Document with explicit weights; periodic graphs also carry indices and flux cycles."""
    periodic = isinstance(obj, PeriodicGraph)
    g = obj.quotient if periodic else obj
    arcs = [
        ArcRecord(
            id=a.id,
            tail=a.tail,
            head=a.head,
            weight=a.weight,
            alpha=a.alpha,
            index=list(obj.index[a.id]) if periodic else None,
        )
        for a in g.arcs
    ]
    doc = GraphDocument(
        vertices=[VertexRecord(id=v.id, weight=v.weight) for v in g.vertices],
        arcs=arcs,
        group_rank=obj.rank if periodic else None,
        flux_cycles=[
            FluxCycleRecord(steps=list(c.steps), orientation=c.orientation) for c in obj.flux_cycles
        ] if periodic and obj.flux_cycles else None,
    )
    return doc


def from_document(doc: GraphDocument) -> GraphLike:
    vertices = tuple(Vertex(r.id, 1.0 if r.weight is None else r.weight) for r in doc.vertices)
    arcs = tuple(Arc(r.id, r.tail, r.head, 1.0 if r.weight is None else r.weight, r.alpha) for r in doc.arcs)
    g = MwGraph(vertices, arcs)
    if doc.weights is not None:
        g = apply_weight_scheme(g, doc.weights)
    if not doc.periodic:
        if doc.flux_cycles:
            raise GraphValidationError("flux cycles are only meaningful for periodic graphs")
        return g
    rank = doc.rank
    index = {r.id: tuple(r.index) for r in doc.arcs if r.index is not None}
    cycles = tuple(FluxCycle(tuple(c.steps), c.orientation) for c in doc.flux_cycles or ())
    return PeriodicGraph(g, index, rank, cycles)


def parse_graph(text: str) -> GraphLike:
    try:
        doc = GraphDocument.model_validate_json(text)
    except ValidationError as e:
        raise GraphValidationError(f"invalid graph document: {e.errors()[0]['msg']}") from e
    return from_document(doc)


def load_graph(path: Union[str, Path]) -> GraphLike:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise GraphValidationError(f"cannot read graph file {path}: {e.strerror}") from e
    except UnicodeDecodeError as e:
        raise GraphValidationError(f"graph file {path} is not UTF-8 text: {e.reason} at byte {e.start}") from e
    graph = parse_graph(text)
    logger.debug("loaded graph from %s", path)
    return graph


def dump_graph(obj: GraphLike) -> str:
    return to_document(obj).model_dump_json(exclude_none=True, indent=2)


def _rounded(value: Any) -> Any:
    if isinstance(value, BaseModel):
        value = value.model_dump()
    if isinstance(value, float):
        return float(format_real(value))
    if isinstance(value, dict):
        return {k: _rounded(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_rounded(v) for v in value]
    return value


def result_json(payload: Any) -> str:
    """One-line JSON with reals rounded to the configured significant digits."""
    return json.dumps(_rounded(payload), ensure_ascii=False)


__all__ = [
    "GraphLike",
    "to_document",
    "from_document",
    "parse_graph",
    "load_graph",
    "dump_graph",
    "result_json",
]
