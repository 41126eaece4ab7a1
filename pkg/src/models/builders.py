"""
Built-in example graphs.

Periodic models are returned as quotient + index with their flux cycles;
``build`` applies the requested weights and the constant flux s.

Conventions:
- polyacetylene: carbons v1, v2 with hydrogens h1, h2. The double bond is the
  digon e2, e3 (v1→v2); the single bond e1 (v2→v1) links neighboring cells.
- agnr(N): N rows across the ribbon, each with a left and a right atom. Rails
  join consecutive rows on each side, every row has a rung, and the rungs of
  odd rows link neighboring cells (index 1). Vertices are numbered v1..v2N
  along the boundary of the cell starting at the left atom of row 1; for
  N = 3 this is the hexagon v1..v6 with the para chord e1: v1→v4.
- zgnr(N): zigzag chains i = 1..N with atoms a_i, b_i; c_i: a_i→b_i,
  l_i: b_i→a_i into the next cell, w_i: b_i→a_{i+1}.
- cycle(n): finite n-cycle, flux on e1.
- z_lattice: one vertex with one loop of index 1.
"""
from __future__ import annotations

import logging
from typing import Callable, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.covering import FluxCycle, PeriodicGraph
from src.graph import Arc, MwGraph, Vertex, apply_weight_scheme, reduce_angle

from .flux import constant_flux_potential

logger = logging.getLogger(__name__)

ModelName = Literal["polyacetylene", "agnr", "zgnr", "cycle", "z_lattice"]
Model = Union[PeriodicGraph, MwGraph]


class ModelSpec(BaseModel):
    """Which example to build, with which weights and flux."""

    model_config = ConfigDict(frozen=True)

    name: ModelName = Field(description="Model family")
    width: Optional[int] = Field(default=None, description="Ribbon width N (agnr, zgnr)")
    n: Optional[int] = Field(default=None, description="Cycle length (cycle)")
    weights: Literal["standard", "combinatorial"] = Field(default="standard", description="Weight scheme")
    flux: float = Field(default=0.0, description="Constant flux s in radians")

    @field_validator("flux", mode="before")
    @classmethod
    def reduce_flux(cls, v):
        """Reduce the flux into [0, 2π)."""
        return reduce_angle(float(v))

    @model_validator(mode="after")
    def check_parameters(self):
        if self.name == "agnr":
            if self.width is None or self.width < 2:
                raise ValueError("agnr needs width N >= 2")
        elif self.name == "zgnr":
            if self.width is None or self.width < 1:
                raise ValueError("zgnr needs width N >= 1")
        elif self.name == "cycle":
            if self.n is None or self.n < 3:
                raise ValueError("cycle needs n >= 3")
        return self

    @property
    def periodic(self) -> bool:
        return self.name != "cycle"

    def with_flux(self, flux: float) -> "ModelSpec":
        return self.model_copy(update={"flux": reduce_angle(flux)})


# ----------------------------------------------------------------------
# quotients (combinatorial weights, β = 0)
# ----------------------------------------------------------------------
def polyacetylene_quotient() -> PeriodicGraph:
    vertices = tuple(Vertex(v) for v in ("v1", "v2", "h1", "h2"))
    arcs = (
        Arc("e1", "v2", "v1"),
        Arc("e2", "v1", "v2"),
        Arc("e3", "v1", "v2"),
        Arc("p1", "v1", "h1"),
        Arc("p2", "v2", "h2"),
    )
    digon = FluxCycle((("e2", 1), ("e3", -1)))
    return PeriodicGraph(MwGraph(vertices, arcs), {"e1": (1,)}, 1, (digon,))


def armchair_quotient(width: int) -> PeriodicGraph:
    if width < 2:
        raise ValueError("armchair ribbons need at least two rows")
    rows = range(width)
    walk = [("l", 1), ("l", 0)] + [("r", r) for r in rows] + [("l", r) for r in range(width - 1, 1, -1)]
    names = {atom: f"v{k}" for k, atom in enumerate(walk, start=1)}

    arcs: list[Arc] = []
    index: dict[str, tuple[int]] = {}
    between: dict[frozenset, tuple[str, str]] = {}  # atom pair -> (arc id, tail atom)
    counter = 0

    def add(tail, head) -> None:
        nonlocal counter
        rung = tail[1] == head[1]
        if rung and tail[1] % 2 == 1:
            aid = f"e{(tail[1] + 1) // 2}"
            index[aid] = (1,) if tail[0] == "l" else (-1,)
        else:
            counter += 1
            aid = f"a{counter}"
        arcs.append(Arc(aid, names[tail], names[head]))
        between[frozenset((tail, head))] = (aid, tail)

    for tail, head in zip(walk, walk[1:] + walk[:1]):
        add(tail, head)
    for r in range(1, width - 1):
        add(("l", r), ("r", r))

    def step(x, y) -> tuple[str, int]:
        aid, tail = between[frozenset((x, y))]
        return aid, 1 if tail == x else -1

    cycles = []
    for r in range(width - 2):
        loop = [("l", r), ("r", r), ("r", r + 1), ("r", r + 2), ("l", r + 2), ("l", r + 1)]
        steps = tuple(step(x, y) for x, y in zip(loop, loop[1:] + loop[:1]))
        # even and odd hexagon rows are traversed with opposite plane orientation
        cycles.append(FluxCycle(steps, 1 if r % 2 == 0 else -1))
    return PeriodicGraph(MwGraph(tuple(Vertex(names[a]) for a in walk), tuple(arcs)), index, 1, tuple(cycles))


def zigzag_quotient(width: int) -> PeriodicGraph:
    if width < 1:
        raise ValueError("zigzag ribbons need at least one chain")
    vertices = []
    arcs = []
    index = {}
    for i in range(1, width + 1):
        vertices += [Vertex(f"a{i}"), Vertex(f"b{i}")]
        arcs.append(Arc(f"c{i}", f"a{i}", f"b{i}"))
        arcs.append(Arc(f"l{i}", f"b{i}", f"a{i}"))
        index[f"l{i}"] = (1,)
        if i < width:
            arcs.append(Arc(f"w{i}", f"b{i}", f"a{i + 1}"))
    cycles = tuple(
        FluxCycle(
            (
                (f"l{i}", 1), (f"c{i}", 1), (f"w{i}", 1),
                (f"l{i + 1}", -1), (f"c{i + 1}", -1), (f"w{i}", -1),
            )
        )
        for i in range(1, width)
    )
    return PeriodicGraph(MwGraph(tuple(vertices), tuple(arcs)), index, 1, cycles)


def z_lattice_quotient() -> PeriodicGraph:
    return PeriodicGraph(MwGraph((Vertex("v1"),), (Arc("e1", "v1", "v1"),)), {"e1": (1,)}, 1)


def cycle_graph(n: int, flux: float = 0.0) -> MwGraph:
    vertices = tuple(Vertex(f"v{k}") for k in range(1, n + 1))
    arcs = tuple(
        Arc(f"e{k}", f"v{k}", f"v{k % n + 1}", 1.0, flux if k == 1 else 0.0) for k in range(1, n + 1)
    )
    return MwGraph(vertices, arcs)


# ----------------------------------------------------------------------
# public builders
# ----------------------------------------------------------------------
def _quotient(spec: ModelSpec) -> PeriodicGraph:
    if spec.name == "polyacetylene":
        return polyacetylene_quotient()
    if spec.name == "agnr":
        return armchair_quotient(spec.width)
    if spec.name == "zgnr":
        return zigzag_quotient(spec.width)
    if spec.name == "z_lattice":
        return z_lattice_quotient()
    raise ValueError(f"{spec.name} is not a periodic model")


def build(spec: ModelSpec) -> Model:
    """The model graph with weights and constant flux applied."""
    if spec.name == "cycle":
        return apply_weight_scheme(cycle_graph(spec.n, spec.flux), spec.weights)
    raw = _quotient(spec)
    weighted = raw.with_quotient(apply_weight_scheme(raw.quotient, spec.weights))
    if spec.flux and not weighted.flux_cycles:
        logger.info("%s has no cycles in its cover; flux %.6g has no effect", spec.name, spec.flux)
    logger.debug("built %s: |V|=%d |E|=%d", spec.name, weighted.quotient.n_vertices, weighted.quotient.n_arcs)
    return constant_flux_potential(weighted, spec.flux)


def flux_family(spec: ModelSpec) -> Callable[[float], PeriodicGraph]:
    """s ↦ the model with constant flux s (built once, re-potentialed per s)."""
    if not spec.periodic:
        raise ValueError(f"{spec.name} is not a periodic model")
    base = build(spec.with_flux(0.0))
    return lambda s: constant_flux_potential(base, s)


__all__ = [
    "ModelSpec",
    "ModelName",
    "Model",
    "polyacetylene_quotient",
    "armchair_quotient",
    "zigzag_quotient",
    "z_lattice_quotient",
    "cycle_graph",
    "build",
    "flux_family",
]
