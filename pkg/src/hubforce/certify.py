"""Linear-time certification of one-step hub-forced consensus.

The certificate is a per-vertex domination check: a non-hub v is dominated
when hub_weight(v) + tau(v) >= rest_weight(v).  Consensus in one synchronous
step from every start state holds exactly when all non-hubs are dominated.
Threshold extractors answer "what uniform hub broadcast would certify":

* w_star          -- max_rest, the minimal sufficient uniform weight;
* w_star_tau      -- max over non-hubs of (rest_weight - tau) clamped at 0;
* coarse_bound    -- (max non-hub in-degree) * (max non-hub in-edge weight),
                     an a priori upper bound on w_star.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .dynamics import check_bias
from .graph import GraphError, InfluenceGraph, weight_summary

# Reports advertise integer arithmetic up to a signed 64-bit budget so they
# stay exchangeable with fixed-width consumers; graphs whose per-vertex
# in-weight exceeds it are rejected outright.
MAX_TOTAL_IN_WEIGHT = 2**63 - 1


@dataclass(frozen=True)
class VertexVerdict:
    vertex: int
    hub_weight: int
    rest_weight: int
    tau: int
    dominated: bool

    def to_json_obj(self) -> dict:
        return {
            "vertex": self.vertex,
            "hub_weight": self.hub_weight,
            "rest_weight": self.rest_weight,
            "tau": self.tau,
            "dominated": self.dominated,
        }


@dataclass(frozen=True)
class CertReport:
    """Domination verdicts per non-hub vertex plus the global thresholds."""

    per_vertex: tuple[VertexVerdict, ...]
    passed: bool
    max_rest: int
    w_star: int
    w_star_tau: int
    coarse_bound: int

    def failing_vertices(self) -> list[int]:
        return [pv.vertex for pv in self.per_vertex if not pv.dominated]

    def to_json_obj(self) -> dict:
        return {
            "per_vertex": [pv.to_json_obj() for pv in self.per_vertex],
            "pass": self.passed,
            "max_rest": self.max_rest,
            "w_star": self.w_star,
            "w_star_tau": self.w_star_tau,
            "coarse_bound": self.coarse_bound,
        }


def certify(g: InfluenceGraph, tau: Optional[Sequence[int]] = None) -> CertReport:
    """Run the per-vertex domination check and fill in all thresholds."""
    hub = g.require_hub()
    bias = check_bias(g, tau)
    summary = weight_summary(g)
    for v in range(g.n):
        if summary.hub_weight[v] + summary.rest_weight[v] > MAX_TOTAL_IN_WEIGHT:
            raise GraphError(
                f"total in-weight at vertex {v} exceeds the 2^63-1 arithmetic budget"
            )
    per_vertex = []
    for v in g.non_hubs():
        t = bias[v] if bias is not None else 0
        hw = summary.hub_weight[v]
        rw = summary.rest_weight[v]
        per_vertex.append(VertexVerdict(v, hw, rw, t, hw + t >= rw))
    return CertReport(
        per_vertex=tuple(per_vertex),
        passed=all(pv.dominated for pv in per_vertex),
        max_rest=summary.max_rest,
        w_star=summary.max_rest,
        w_star_tau=tau_threshold(g, bias) if bias is not None else summary.max_rest,
        coarse_bound=coarse_bound(g),
    )


def uniform_threshold(g: InfluenceGraph) -> int:
    """Minimal uniform hub broadcast weight that would certify the graph.

    The hub's existing out-edges are ignored: this answers what weight would
    suffice if the hub broadcast uniformly to every non-hub.
    """
    return weight_summary(g).max_rest


def tau_threshold(g: InfluenceGraph, tau: Sequence[int]) -> int:
    """Minimal uniform broadcast under a tie bias: max of (rest - tau) clamped at 0."""
    bias = check_bias(g, tau)
    if bias is None:
        raise ValueError("tau is required")
    summary = weight_summary(g)
    return max((max(summary.rest_weight[v] - bias[v], 0) for v in g.non_hubs()), default=0)


def coarse_bound(g: InfluenceGraph) -> int:
    """Quick upper bound on the uniform threshold, from degrees and max weight.

    Counts only edges between non-hubs; 0 when there are none.
    """
    hub = g.require_hub()
    max_degree = 0
    max_weight = 0
    degree = [0] * g.n
    for u, v, w in g.edges():
        if u == hub or v == hub:
            continue
        degree[v] += 1
        if degree[v] > max_degree:
            max_degree = degree[v]
        if w > max_weight:
            max_weight = w
    return max_degree * max_weight


@dataclass(frozen=True)
class SeedVerdict:
    vertex: int
    hub_weight: int
    weight_from_seed: int
    rest_outside_seed: int
    holds: bool

    def to_json_obj(self) -> dict:
        return {
            "vertex": self.vertex,
            "hub_weight": self.hub_weight,
            "weight_from_seed": self.weight_from_seed,
            "rest_outside_seed": self.rest_outside_seed,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class SeedReport:
    """Sufficiency check for a seed set preset to Glory to survive one step.

    For each seed vertex v the in-weight from inside the seed set plus the
    hub's weight must meet the in-weight from outside (hub excluded), taking
    every vertex outside the set to be adversarially in Gnash.
    """

    seed_set: tuple[int, ...]
    per_vertex: tuple[SeedVerdict, ...]
    sufficient: bool

    def to_json_obj(self) -> dict:
        return {
            "seed_set": list(self.seed_set),
            "per_vertex": [pv.to_json_obj() for pv in self.per_vertex],
            "sufficient": self.sufficient,
        }


def seed_check(g: InfluenceGraph, seed: Iterable[int]) -> SeedReport:
    """Evaluate the seed-persistence inequality for every seed vertex."""
    hub = g.require_hub()
    members = set(seed)
    for v in members:
        if not 0 <= v < g.n:
            raise GraphError(f"seed vertex {v} out of range for n={g.n}")
    if hub in members:
        raise GraphError(f"seed set must not contain the hub ({hub})")
    from_seed = {v: 0 for v in members}
    outside = {v: 0 for v in members}
    for u, v, w in g.edges():
        if v not in members or u == hub:
            continue
        if u in members:
            from_seed[v] += w
        else:
            outside[v] += w
    per_vertex = []
    for v in sorted(members):
        hw = g.hub_weight(v)
        holds = hw + from_seed[v] >= outside[v]
        per_vertex.append(SeedVerdict(v, hw, from_seed[v], outside[v], holds))
    return SeedReport(
        seed_set=tuple(sorted(members)),
        per_vertex=tuple(per_vertex),
        sufficient=all(pv.holds for pv in per_vertex),
    )
