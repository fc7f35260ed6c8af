"""FastAPI application exposing certification, dynamics, oracle, and sweeps.

Domain errors (invalid graphs, missing hub, bad states) map to HTTP 400;
request-shape problems are pydantic's usual 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..certify import certify, seed_check, tau_threshold
from ..dynamics import (
    async_pass,
    state_from_string,
    state_to_string,
    sync_step,
    trajectory,
)
from ..examples import example_graph
from ..experiments import ExperimentConfig, WSweep, results_to_json_obj, run_sweep
from ..graph import InfluenceGraph, serialize_graph
from ..oracle import exhaustive_one_step
from . import schemas

STEP_CAP = 2**20

app = FastAPI(
    title="hubforce",
    version=__version__,
    description="One-step hub-forced consensus certification and simulation.",
)


@app.exception_handler(ValueError)
async def domain_error_handler(request: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _state(text: str, g: InfluenceGraph):
    state = state_from_string(text)
    if len(state) != g.n:
        raise ValueError(f"state string has length {len(state)}, graph has {g.n} vertices")
    return state


@app.get("/health", response_model=schemas.HealthResponse)
def health():
    return schemas.HealthResponse()


@app.post("/certify", response_model=schemas.CertifyResponse)
def certify_endpoint(req: schemas.CertifyRequest):
    report = certify(req.graph.to_graph(), req.tau)
    return schemas.CertifyResponse.model_validate(report.to_json_obj())


@app.post("/thresholds", response_model=schemas.ThresholdResponse)
def thresholds_endpoint(req: schemas.CertifyRequest):
    g = req.graph.to_graph()
    report = certify(g, req.tau)
    return schemas.ThresholdResponse(
        max_rest=report.max_rest,
        w_star=report.w_star,
        w_star_tau=tau_threshold(g, req.tau) if req.tau is not None else None,
        coarse_bound=report.coarse_bound,
    )


@app.post("/step", response_model=schemas.StepResponse)
def step_endpoint(req: schemas.StepRequest):
    g = req.graph.to_graph()
    nxt = sync_step(g, _state(req.state, g), rule=req.rule, tau=req.tau)
    return schemas.StepResponse(state=state_to_string(nxt))


@app.post("/run", response_model=schemas.RunResponse)
def run_endpoint(req: schemas.RunRequest):
    g = req.graph.to_graph()
    traj = trajectory(
        g,
        _state(req.state, g),
        rule=req.rule,
        tau=req.tau,
        max_steps=min(req.max_steps, STEP_CAP),
    )
    return schemas.RunResponse(
        states=[state_to_string(s) for s in traj.states],
        outcome=traj.outcome,
        cycle_length=traj.cycle_length,
    )


@app.post("/async-pass", response_model=schemas.AsyncPassResponse)
def async_pass_endpoint(req: schemas.AsyncPassRequest):
    g = req.graph.to_graph()
    result = async_pass(g, _state(req.state, g), req.schedule, req.tau)
    return schemas.AsyncPassResponse(
        state=state_to_string(result.state),
        covers_all_non_hubs=result.covers_all_non_hubs,
    )


@app.post("/seed-check", response_model=schemas.SeedCheckResponse)
def seed_check_endpoint(req: schemas.SeedCheckRequest):
    report = seed_check(req.graph.to_graph(), req.seed)
    return schemas.SeedCheckResponse.model_validate(report.to_json_obj())


@app.post("/oracle/one-step", response_model=schemas.OracleResponse)
def oracle_endpoint(req: schemas.OracleRequest):
    verdict = exhaustive_one_step(req.graph.to_graph(), req.tau)
    return schemas.OracleResponse.model_validate(verdict.to_json_obj())


@app.post("/sweep", response_model=schemas.SweepResponse)
def sweep_endpoint(req: schemas.SweepRequest):
    cfg = ExperimentConfig(
        n=req.n,
        edge_prob=req.edge_prob,
        weight_min=req.weight_min,
        weight_max=req.weight_max,
        w_sweep=WSweep(req.w_sweep.start, req.w_sweep.stop, req.w_sweep.step),
        async_trials=req.async_trials,
        rng_seed=req.rng_seed,
    )
    obj = results_to_json_obj(run_sweep(cfg))
    return schemas.SweepResponse.model_validate(obj)


@app.get("/examples/{name}", response_model=schemas.ExampleResponse)
def example_endpoint(name: str, W: int | None = None):
    g = example_graph(name, W)
    return schemas.ExampleResponse(
        graph=schemas.GraphModel.from_graph(g), text=serialize_graph(g)
    )
