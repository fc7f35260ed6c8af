"""Brute-force ground truth for small instances.

Enumerates every assignment of the non-hub vertices and checks that one
synchronous hub-forced step reaches unanimous Glory; the certification
module's linear-time verdicts are validated against this enumeration.
Enumeration order is fixed so witnesses are deterministic: vertex 0 is the
least-significant position and Gnash sorts before Glory, so index 0 is the
all-Gnash state.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .certify import certify, coarse_bound, uniform_threshold
from .dynamics import HEAVEN, Opinion, State, all_glory, state_to_string, sync_step
from .graph import InfluenceGraph, attach_uniform_hub, build_graph

MAX_ORACLE_VERTICES = 24


@dataclass(frozen=True)
class OracleVerdict:
    """Result of exhaustive one-step checking.

    ``witness`` is the first (state, vertex) violating convergence in
    enumeration order, present exactly when convergence fails.
    """

    converges_all_states: bool
    witness: Optional[tuple[State, int]]
    states_checked: int

    def to_json_obj(self) -> dict:
        obj: dict = {
            "converges_all_states": self.converges_all_states,
            "states_checked": self.states_checked,
            "witness": None,
        }
        if self.witness is not None:
            state, vertex = self.witness
            obj["witness"] = {"state": state_to_string(state), "vertex": vertex}
        return obj


def _check_size(g: InfluenceGraph) -> None:
    if g.n > MAX_ORACLE_VERTICES:
        raise ValueError(
            f"exhaustive check limited to {MAX_ORACLE_VERTICES} vertices, got {g.n}"
        )


def exhaustive_one_step(g: InfluenceGraph, tau=None) -> OracleVerdict:
    """Check sync_step(s) = all_glory for every non-hub assignment.

    The hub's coordinate is not enumerated (its next state is forced); it is
    held at Gnash so index 0 is literally the all-Gnash state.
    """
    hub = g.require_hub()
    _check_size(g)
    non_hubs = [v for v in range(g.n) if v != hub]
    target = all_glory(g.n)
    checked = 0
    for index in range(1 << len(non_hubs)):
        assignment = [Opinion.GNASH] * g.n
        for bit, v in enumerate(non_hubs):
            if index >> bit & 1:
                assignment[v] = Opinion.GLORY
        state = tuple(assignment)
        checked += 1
        nxt = sync_step(g, state, HEAVEN, tau)
        if nxt != target:
            culprit = next(v for v in non_hubs if nxt[v] is Opinion.GNASH)
            return OracleVerdict(False, (state, culprit), checked)
    return OracleVerdict(True, None, checked)


def exhaustive_uniform_threshold(g: InfluenceGraph, w_cap: int) -> int:
    """Smallest uniform hub broadcast weight in [0, w_cap] that converges.

    Searches by re-attaching the hub at each candidate weight and running
    the exhaustive check; raises if no weight within the cap works.
    """
    g.require_hub()
    _check_size(g)
    for w in range(w_cap + 1):
        if exhaustive_one_step(attach_uniform_hub(g, w)).converges_all_states:
            return w
    raise ValueError(f"no uniform hub weight <= {w_cap} achieves one-step convergence")


# --- randomized equivalence corpus ------------------------------------------


def random_graph(rng: random.Random, n: int, max_weight: int = 6) -> InfluenceGraph:
    """Dense random instance: every ordered pair (self-loops included) gets a
    weight uniform in {0..max_weight}, 0 meaning absent; hub position random."""
    hub = rng.randrange(n)
    edges = []
    for u in range(n):
        for v in range(n):
            w = rng.randint(0, max_weight)
            if w > 0:
                edges.append((u, v, w))
    return build_graph(n, hub, edges)


def random_bias(rng: random.Random, n: int, max_bias: int = 3) -> tuple[int, ...]:
    return tuple(rng.randint(0, max_bias) for _ in range(n))


@dataclass
class EquivalenceSummary:
    graphs: int = 0
    checks: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def run_equivalence_suite(
    count: int = 200,
    seed: int = 1234,
    min_n: int = 2,
    max_n: int = 8,
    max_weight: int = 6,
    max_bias: int = 3,
) -> EquivalenceSummary:
    """Pit the linear-time certificate against the exhaustive oracle.

    For each random instance: unbiased and biased verdicts must agree with
    enumeration, the uniform threshold must equal the searched one, and at
    the boundary weights max_rest / max_rest - 1 the verdict must flip.
    Witnesses are re-simulated to confirm they genuinely violate convergence.
    """
    rng = random.Random(seed)
    summary = EquivalenceSummary()
    for i in range(count):
        n = rng.randint(min_n, max_n)
        g = random_graph(rng, n, max_weight)
        tau = random_bias(rng, n, max_bias)
        label = f"graph {i} (n={n}, hub={g.hub})"

        for name, bias in (("unbiased", None), ("biased", tau)):
            verdict = exhaustive_one_step(g, bias)
            summary.checks += 1
            if certify(g, bias).passed != verdict.converges_all_states:
                summary.mismatches.append(f"{label}: {name} certificate != oracle")
            if verdict.witness is not None:
                state, vertex = verdict.witness
                summary.checks += 1
                if sync_step(g, state, HEAVEN, bias)[vertex] is not Opinion.GNASH:
                    summary.mismatches.append(f"{label}: {name} witness does not re-simulate")

        w_star = uniform_threshold(g)
        summary.checks += 1
        if exhaustive_uniform_threshold(g, coarse_bound(g)) != w_star:
            summary.mismatches.append(f"{label}: uniform threshold != exhaustive search")

        boosted = attach_uniform_hub(g, w_star)
        summary.checks += 1
        if not exhaustive_one_step(boosted).converges_all_states:
            summary.mismatches.append(f"{label}: no convergence at the threshold weight")
        if w_star > 0:
            starved = attach_uniform_hub(g, w_star - 1)
            summary.checks += 1
            if exhaustive_one_step(starved).converges_all_states:
                summary.mismatches.append(f"{label}: convergence below the threshold weight")
        summary.graphs += 1
    return summary
