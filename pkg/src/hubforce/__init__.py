"""Hub-forced consensus on weighted digraphs.

Certifies one-step convergence to the hub's state, extracts sharp
hub-strength thresholds, simulates the synchronous and asynchronous
dynamics, and reproduces the uniform-weight phase-transition experiment
with a brute-force oracle backstop.
"""

__version__ = "0.1.0"

from .certify import (
    CertReport,
    SeedReport,
    certify,
    coarse_bound,
    seed_check,
    tau_threshold,
    uniform_threshold,
)
from .dynamics import (
    AsyncPassResult,
    Opinion,
    State,
    TrajectoryResult,
    all_glory,
    all_gnash,
    async_pass,
    force_hub,
    majority_vertex,
    next_vertex,
    score,
    state_from_string,
    state_to_string,
    sync_step,
    trajectory,
)
from .examples import heaven, hellc4
from .experiments import (
    ExperimentConfig,
    SweepResult,
    SweepRow,
    WSweep,
    emit_results,
    gen_random_graph,
    run_sweep,
)
from .graph import (
    GraphError,
    GraphFormatError,
    HubRequiredError,
    InfluenceGraph,
    WeightSummary,
    attach_uniform_hub,
    build_graph,
    load_graph,
    parse_graph,
    serialize_graph,
    weight_summary,
)
from .oracle import OracleVerdict, exhaustive_one_step, exhaustive_uniform_threshold

__all__ = [
    "AsyncPassResult",
    "CertReport",
    "ExperimentConfig",
    "GraphError",
    "GraphFormatError",
    "HubRequiredError",
    "InfluenceGraph",
    "Opinion",
    "OracleVerdict",
    "SeedReport",
    "State",
    "SweepResult",
    "SweepRow",
    "TrajectoryResult",
    "WSweep",
    "WeightSummary",
    "all_glory",
    "all_gnash",
    "async_pass",
    "attach_uniform_hub",
    "build_graph",
    "certify",
    "coarse_bound",
    "emit_results",
    "exhaustive_one_step",
    "exhaustive_uniform_threshold",
    "force_hub",
    "gen_random_graph",
    "heaven",
    "hellc4",
    "load_graph",
    "majority_vertex",
    "next_vertex",
    "parse_graph",
    "run_sweep",
    "score",
    "seed_check",
    "serialize_graph",
    "state_from_string",
    "state_to_string",
    "sync_step",
    "tau_threshold",
    "trajectory",
    "uniform_threshold",
    "weight_summary",
]
