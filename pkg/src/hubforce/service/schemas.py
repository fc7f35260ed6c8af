"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..graph import InfluenceGraph, build_graph


class GraphModel(BaseModel):
    """Wire form of a graph, mirroring the .json file format."""

    n: int
    hub: Optional[int] = None
    edges: list[tuple[int, int, int]] = Field(default_factory=list)

    def to_graph(self) -> InfluenceGraph:
        return build_graph(self.n, self.hub, self.edges)

    @classmethod
    def from_graph(cls, g: InfluenceGraph) -> "GraphModel":
        return cls(n=g.n, hub=g.hub, edges=list(g.edges()))


class CertifyRequest(BaseModel):
    graph: GraphModel
    tau: Optional[list[int]] = None


class VertexVerdictModel(BaseModel):
    vertex: int
    hub_weight: int
    rest_weight: int
    tau: int
    dominated: bool


class CertifyResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    per_vertex: list[VertexVerdictModel]
    passed: bool = Field(alias="pass")
    max_rest: int
    w_star: int
    w_star_tau: int
    coarse_bound: int


class ThresholdResponse(BaseModel):
    max_rest: int
    w_star: int
    w_star_tau: Optional[int] = None
    coarse_bound: int


class StepRequest(BaseModel):
    graph: GraphModel
    state: str
    rule: Literal["heaven", "majority"] = "heaven"
    tau: Optional[list[int]] = None


class StepResponse(BaseModel):
    state: str


class RunRequest(BaseModel):
    graph: GraphModel
    state: str
    rule: Literal["heaven", "majority"] = "heaven"
    tau: Optional[list[int]] = None
    max_steps: int = Field(default=1, ge=1)


class RunResponse(BaseModel):
    states: list[str]
    outcome: Literal["fixed_point", "cycle", "truncated"]
    cycle_length: Optional[int] = None


class AsyncPassRequest(BaseModel):
    graph: GraphModel
    state: str
    schedule: list[int]
    tau: Optional[list[int]] = None


class AsyncPassResponse(BaseModel):
    state: str
    covers_all_non_hubs: bool


class SeedCheckRequest(BaseModel):
    graph: GraphModel
    seed: list[int]


class SeedVerdictModel(BaseModel):
    vertex: int
    hub_weight: int
    weight_from_seed: int
    rest_outside_seed: int
    holds: bool


class SeedCheckResponse(BaseModel):
    seed_set: list[int]
    per_vertex: list[SeedVerdictModel]
    sufficient: bool


class OracleRequest(BaseModel):
    graph: GraphModel
    tau: Optional[list[int]] = None


class OracleWitnessModel(BaseModel):
    state: str
    vertex: int


class OracleResponse(BaseModel):
    converges_all_states: bool
    witness: Optional[OracleWitnessModel] = None
    states_checked: int


class WSweepModel(BaseModel):
    start: int = 0
    stop: int = 0
    step: int = 1


class SweepRequest(BaseModel):
    n: int = 50
    edge_prob: float = 0.1
    weight_min: int = 1
    weight_max: int = 10
    w_sweep: WSweepModel = Field(default_factory=WSweepModel)
    async_trials: int = 100
    rng_seed: int = 0


class SweepRowModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    w: int = Field(alias="W")
    sync_fraction: float
    async_success_rate: float
    at_or_above_threshold: bool


class SweepMetadataModel(SweepRequest):
    max_rest: int
    coarse_bound: int


class SweepResponse(BaseModel):
    metadata: SweepMetadataModel
    rows: list[SweepRowModel]


class ExampleResponse(BaseModel):
    graph: GraphModel
    text: str


class HealthResponse(BaseModel):
    status: str = "ok"
