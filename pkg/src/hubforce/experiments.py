"""Random-instance generation and the uniform hub-weight sweep.

Reproducibility contract: all randomness comes from numpy's PCG64 seeded via
SeedSequence, with one stream per purpose so results stay stable under
unrelated config changes.  The graph stream is keyed (rng_seed, 0) and drawn
in a fixed order (ordered non-hub pairs, inclusion draw then weight draw);
the schedule stream for sweep point W is keyed (rng_seed, 1, W), so graph
topology is invariant under changes to async_trials and per-W trials are
invariant under changes to the sweep range.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field, replace
from typing import Iterator

import numpy as np

from .certify import coarse_bound, uniform_threshold
from .dynamics import Opinion, all_gnash, async_pass, sync_step
from .graph import InfluenceGraph, attach_uniform_hub, build_graph

logger = logging.getLogger(__name__)

AUTO_BRACKET_MARGIN = 5


@dataclass(frozen=True)
class WSweep:
    """Inclusive integer range with step."""

    start: int
    stop: int
    step: int = 1

    def __post_init__(self):
        if self.step < 1:
            raise ValueError(f"sweep step must be >= 1, got {self.step}")
        if self.stop < self.start:
            raise ValueError(f"empty sweep range [{self.start}, {self.stop}]")
        if self.start < 0:
            raise ValueError(f"sweep start must be >= 0, got {self.start}")

    def values(self) -> Iterator[int]:
        return iter(range(self.start, self.stop + 1, self.step))

    def contains(self, value: int) -> bool:
        return self.start <= value <= self.stop


@dataclass(frozen=True)
class ExperimentConfig:
    n: int = 50
    edge_prob: float = 0.1
    weight_min: int = 1
    weight_max: int = 10
    w_sweep: WSweep = field(default_factory=lambda: WSweep(0, 0))
    async_trials: int = 100
    rng_seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0.0 <= self.edge_prob <= 1.0:
            raise ValueError(f"edge_prob must be in [0, 1], got {self.edge_prob}")
        if self.weight_min < 1:
            raise ValueError(f"weight_min must be >= 1, got {self.weight_min}")
        if self.weight_max < self.weight_min:
            raise ValueError(
                f"weight_max {self.weight_max} below weight_min {self.weight_min}"
            )
        if self.async_trials < 1:
            raise ValueError(f"async_trials must be >= 1, got {self.async_trials}")
        if not 0 <= self.rng_seed < 2**64:
            raise ValueError(f"rng_seed must be an unsigned 64-bit integer, got {self.rng_seed}")

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "edge_prob": self.edge_prob,
            "weight_min": self.weight_min,
            "weight_max": self.weight_max,
            "w_sweep": {
                "start": self.w_sweep.start,
                "stop": self.w_sweep.stop,
                "step": self.w_sweep.step,
            },
            "async_trials": self.async_trials,
            "rng_seed": self.rng_seed,
        }


_CONFIG_KEYS = frozenset(
    ("n", "edge_prob", "weight_min", "weight_max", "w_sweep", "async_trials", "rng_seed")
)


def _require_int(obj: dict, key: str) -> int:
    value = obj[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"config field {key!r} must be an integer, got {value!r}")
    return value


def config_from_json_obj(obj: dict) -> ExperimentConfig:
    """Build a config from its JSON form; missing fields take the defaults."""
    if not isinstance(obj, dict):
        raise ValueError("experiment config must be a JSON object")
    unknown = set(obj) - _CONFIG_KEYS
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
    kwargs = {}
    for key in ("n", "weight_min", "weight_max", "async_trials", "rng_seed"):
        if key in obj:
            kwargs[key] = _require_int(obj, key)
    if "edge_prob" in obj:
        if not isinstance(obj["edge_prob"], (int, float)) or isinstance(obj["edge_prob"], bool):
            raise ValueError(f"config field 'edge_prob' must be a number, got {obj['edge_prob']!r}")
        kwargs["edge_prob"] = float(obj["edge_prob"])
    if "w_sweep" in obj and obj["w_sweep"] is not None:
        sweep = obj["w_sweep"]
        if not isinstance(sweep, dict) or "start" not in sweep or "stop" not in sweep:
            raise ValueError("w_sweep must be an object with keys start, stop[, step]")
        kwargs["w_sweep"] = WSweep(
            _require_int(sweep, "start"),
            _require_int(sweep, "stop"),
            _require_int(sweep, "step") if "step" in sweep else 1,
        )
    return ExperimentConfig(**kwargs)


def load_config(path: str) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON: {exc}") from None
    return config_from_json_obj(obj)


def _graph_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, 0])))


def _schedule_rng(seed: int, w: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, 1, w])))


def gen_random_graph(cfg: ExperimentConfig) -> InfluenceGraph:
    """Directed Erdos-Renyi instance over the non-hub vertices.

    The hub is vertex n-1 and starts with no edges; each ordered non-hub
    pair (u, v), u != v, is included with probability edge_prob and uniform
    integer weight in [weight_min, weight_max].  Deterministic in rng_seed.
    """
    rng = _graph_rng(cfg.rng_seed)
    edges = []
    non_hub_count = cfg.n - 1
    for u in range(non_hub_count):
        for v in range(non_hub_count):
            if u == v:
                continue
            if rng.random() < cfg.edge_prob:
                w = int(rng.integers(cfg.weight_min, cfg.weight_max + 1))
                edges.append((u, v, w))
    return build_graph(cfg.n, cfg.n - 1, edges)


@dataclass(frozen=True)
class SweepRow:
    w: int
    sync_fraction: float
    async_success_rate: float
    at_or_above_threshold: bool

    def to_json_obj(self) -> dict:
        return {
            "W": self.w,
            "sync_fraction": self.sync_fraction,
            "async_success_rate": self.async_success_rate,
            "at_or_above_threshold": self.at_or_above_threshold,
        }


@dataclass(frozen=True)
class SweepResult:
    config: ExperimentConfig
    max_rest: int
    coarse_bound: int
    rows: tuple[SweepRow, ...]

    @property
    def effective_sweep(self) -> WSweep:
        return self.config.w_sweep


def sweep_graph(
    base: InfluenceGraph, sweep: WSweep, async_trials: int, rng_seed: int
) -> tuple[SweepRow, ...]:
    """Sweep the uniform hub broadcast weight over a fixed base graph.

    Per sweep point W: one synchronous step from all-Gnash yields the
    fraction of non-hubs reaching Glory, and async_trials uniformly random
    non-hub permutations each run as a single asynchronous pass yield the
    one-pass success rate.
    """
    max_rest = uniform_threshold(base)
    non_hubs = [v for v in base.non_hubs()]
    start = all_gnash(base.n)
    rows = []
    for w in sweep.values():
        g = attach_uniform_hub(base, w)
        if non_hubs:
            stepped = sync_step(g, start)
            glory = sum(1 for v in non_hubs if stepped[v] is Opinion.GLORY)
            sync_fraction = glory / len(non_hubs)
            rng = _schedule_rng(rng_seed, w)
            successes = 0
            for _ in range(async_trials):
                order = [non_hubs[i] for i in rng.permutation(len(non_hubs))]
                final = async_pass(g, start, order).state
                if all(final[v] is Opinion.GLORY for v in non_hubs):
                    successes += 1
            async_rate = successes / async_trials
        else:
            sync_fraction = 1.0
            async_rate = 1.0
        rows.append(SweepRow(w, sync_fraction, async_rate, w >= max_rest))
    return tuple(rows)


def run_sweep(cfg: ExperimentConfig) -> SweepResult:
    """Generate one instance and sweep the uniform hub weight across it.

    If the requested range does not contain the instance's threshold
    max_rest, it is replaced by the bracket [max_rest - 5, max_rest + 5]
    (clamped at 0) and a warning is logged.
    """
    base = gen_random_graph(cfg)
    max_rest = uniform_threshold(base)
    sweep = cfg.w_sweep
    if not sweep.contains(max_rest):
        sweep = WSweep(
            max(0, max_rest - AUTO_BRACKET_MARGIN), max_rest + AUTO_BRACKET_MARGIN
        )
        logger.warning(
            "sweep range [%d, %d] misses max_rest=%d; using [%d, %d]",
            cfg.w_sweep.start,
            cfg.w_sweep.stop,
            max_rest,
            sweep.start,
            sweep.stop,
        )
    cfg = replace(cfg, w_sweep=sweep)
    rows = sweep_graph(base, sweep, cfg.async_trials, cfg.rng_seed)
    return SweepResult(cfg, max_rest, coarse_bound(base), rows)


# --- result emission ---------------------------------------------------------

CSV_HEADER = "W,sync_fraction,async_success_rate,at_or_above_threshold"


def results_to_csv(result: SweepResult) -> str:
    lines = [CSV_HEADER]
    for row in result.rows:
        flag = "true" if row.at_or_above_threshold else "false"
        lines.append(f"{row.w},{row.sync_fraction!r},{row.async_success_rate!r},{flag}")
    return "\n".join(lines) + "\n"


def results_to_json_obj(result: SweepResult) -> dict:
    metadata = result.config.to_json_obj()
    metadata["max_rest"] = result.max_rest
    metadata["coarse_bound"] = result.coarse_bound
    return {"metadata": metadata, "rows": [row.to_json_obj() for row in result.rows]}


def rows_from_json_obj(obj: dict) -> tuple[SweepRow, ...]:
    return tuple(
        SweepRow(
            row["W"],
            row["sync_fraction"],
            row["async_success_rate"],
            row["at_or_above_threshold"],
        )
        for row in obj["rows"]
    )


def emit_results(result: SweepResult, fmt: str, path: str) -> None:
    """Write the sweep to path as csv or json; the CSV is byte-stable."""
    if not result.rows:
        raise ValueError("no sweep rows to emit")
    if fmt == "csv":
        payload = results_to_csv(result)
    elif fmt == "json":
        payload = json.dumps(results_to_json_obj(result), indent=2) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r} (expected csv or json)")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(payload)
