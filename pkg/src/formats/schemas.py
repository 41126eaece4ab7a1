from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class VertexRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str = Field(..., min_length=1, description="Vertex id")
    weight: Optional[float] = Field(default=None, gt=0, description="Vertex weight m(v); omitted with a weights shorthand")


class ArcRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str = Field(..., min_length=1, description="Arc id")
    tail: str = Field(..., description="Tail vertex id")
    head: str = Field(..., description="Head vertex id")
    weight: Optional[float] = Field(default=None, gt=0, description="Arc weight m_e")
    alpha: float = Field(default=0.0, description="Magnetic potential in radians (β for periodic graphs)")
    index: Optional[List[int]] = Field(default=None, description="Covering index in Z^d; absent means zero")


class FluxCycleRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    steps: List[Tuple[str, Literal[1, -1]]] = Field(..., min_length=1, description="Closed walk as (arc id, ±1)")
    orientation: Literal[1, -1] = 1


class GraphDocument(BaseModel):
    """JSON graph: a finite MW-graph, or the quotient of a periodic one."""

    model_config = ConfigDict(extra="forbid")

    vertices: List[VertexRecord] = Field(..., min_length=1)
    arcs: List[ArcRecord] = Field(default_factory=list)
    weights: Optional[Literal["standard", "combinatorial"]] = Field(
        default=None,
        description="Weight shorthand replacing explicit vertex and arc weights",
    )
    group_rank: Optional[int] = Field(default=None, ge=1, description="Rank d of the covering group Z^d")
    flux_cycles: Optional[List[FluxCycleRecord]] = Field(
        default=None,
        description="Cycle metadata for constant-flux potentials",
    )

    @model_validator(mode="after")
    def check_weights(self):
        explicit = [r.id for r in (*self.vertices, *self.arcs) if r.weight is not None]
        if self.weights is not None and explicit:
            raise ValueError(f"weights shorthand {self.weights!r} conflicts with explicit weights on {explicit[:3]}")
        if self.weights is None:
            missing = [r.id for r in (*self.vertices, *self.arcs) if r.weight is None]
            if missing:
                raise ValueError(f"weights missing for {missing[:3]}; give them or use the weights shorthand")
        return self

    @model_validator(mode="after")
    def check_index(self):
        lengths = {len(a.index) for a in self.arcs if a.index is not None}
        if len(lengths) > 1:
            raise ValueError(f"arc indices have mixed lengths {sorted(lengths)}")
        if self.group_rank is not None and lengths and lengths != {self.group_rank}:
            raise ValueError(f"arc indices must have length group_rank={self.group_rank}")
        return self

    @property
    def periodic(self) -> bool:
        return self.group_rank is not None or any(a.index is not None for a in self.arcs)

    @property
    def rank(self) -> Optional[int]:
        if self.group_rank is not None:
            return self.group_rank
        for a in self.arcs:
            if a.index is not None:
                return len(a.index)
        return None


class SpectrumDocument(BaseModel):
    values: List[float]
    ambient: Tuple[float, float]


class BracketingDocument(BaseModel):
    intervals: List[Tuple[float, float]]
    union: List[Tuple[float, float]]
    gaps: List[Tuple[float, float]]
    isolated_points: List[float] = Field(default_factory=list)
    padded_from: Optional[int] = None
    ambient: Optional[Tuple[float, float]] = None
    refined: bool = False


class DeltaDocument(BaseModel):
    delta: float
    lambda_1: float
    variant: str
    vertex: str
    arcs: List[str]
    verdict: str
    trace_discrepancy: Optional[float] = None


class ErrorDocument(BaseModel):
    error: str = Field(..., description="Stable machine-readable error code")
    message: str

    @field_validator("message", mode="before")
    @classmethod
    def single_line(cls, v):
        return " ".join(str(v).split())
