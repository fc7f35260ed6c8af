"""Binary-opinion update dynamics over influence graphs.

Two per-vertex rules exist: the hub-forced rule (scores are evaluated as if
the hub already held Glory, and the hub itself always updates to Glory) and
a plain majority vote for hub-free graphs.  Ties go to Glory under both.
All operations are pure; no update ever mutates its input state.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Optional, Sequence

from .graph import InfluenceGraph

HEAVEN = "heaven"
MAJORITY = "majority"


class Opinion(Enum):
    GLORY = "G"
    GNASH = "N"


State = tuple[Opinion, ...]
BiasVector = tuple[int, ...]


def all_gnash(n: int) -> State:
    return (Opinion.GNASH,) * n


def all_glory(n: int) -> State:
    return (Opinion.GLORY,) * n


def state_from_string(text: str) -> State:
    """Parse a state literal over {G, N}, index order."""
    try:
        return tuple(Opinion(ch) for ch in text)
    except ValueError:
        raise ValueError(f"state string must use only 'G' and 'N', got {text!r}") from None


def state_to_string(s: State) -> str:
    return "".join(o.value for o in s)


def check_state(g: InfluenceGraph, s: Sequence[Opinion]) -> None:
    if len(s) != g.n:
        raise ValueError(f"state has length {len(s)}, graph has {g.n} vertices")


def check_bias(g: InfluenceGraph, tau: Optional[Sequence[int]]) -> Optional[BiasVector]:
    """Validate a per-vertex tie bias; None means zero bias everywhere."""
    if tau is None:
        return None
    tau = tuple(tau)
    if len(tau) != g.n:
        raise ValueError(f"bias vector has length {len(tau)}, graph has {g.n} vertices")
    for v, t in enumerate(tau):
        if t < 0:
            raise ValueError(f"bias must be non-negative, got tau({v}) = {t}")
    return tau


def score(g: InfluenceGraph, s: State, v: int, x: Opinion) -> int:
    """Total in-weight of v from sources currently holding opinion x."""
    check_state(g, s)
    return sum(w for u, w in g.in_edges(v) if s[u] is x)


def force_hub(g: InfluenceGraph, s: State) -> State:
    """Copy of s with the hub's coordinate overwritten to Glory."""
    hub = g.require_hub()
    check_state(g, s)
    if s[hub] is Opinion.GLORY:
        return tuple(s)
    out = list(s)
    out[hub] = Opinion.GLORY
    return tuple(out)


def _hub_forced_scores(g: InfluenceGraph, s: Sequence[Opinion], v: int, hub: int) -> tuple[int, int]:
    # Scores of v as if the hub held Glory, without copying the state.
    glory = 0
    gnash = 0
    for u, w in g.in_edges(v):
        if u == hub or s[u] is Opinion.GLORY:
            glory += w
        else:
            gnash += w
    return glory, gnash


def next_vertex(
    g: InfluenceGraph, s: State, v: int, tau: Optional[Sequence[int]] = None
) -> Opinion:
    """Hub-forced update of a single vertex; the hub itself yields Glory.

    With a bias vector, tau(v) is added to the Glory score before the
    comparison.  Ties go to Glory.
    """
    hub = g.require_hub()
    check_state(g, s)
    bias = check_bias(g, tau)
    if v == hub:
        return Opinion.GLORY
    glory, gnash = _hub_forced_scores(g, s, v, hub)
    if bias is not None:
        glory += bias[v]
    return Opinion.GLORY if glory >= gnash else Opinion.GNASH


def majority_vertex(g: InfluenceGraph, s: State, v: int) -> Opinion:
    """Plain weighted majority on the raw state; no hub forcing, tie to Glory."""
    check_state(g, s)
    glory = 0
    gnash = 0
    for u, w in g.in_edges(v):
        if s[u] is Opinion.GLORY:
            glory += w
        else:
            gnash += w
    return Opinion.GLORY if glory >= gnash else Opinion.GNASH


def sync_step(
    g: InfluenceGraph,
    s: State,
    rule: str = HEAVEN,
    tau: Optional[Sequence[int]] = None,
) -> State:
    """One synchronous update: every vertex evaluated against the same input s."""
    check_state(g, s)
    if rule == MAJORITY:
        if tau is not None:
            raise ValueError("majority rule takes no tie bias")
        return tuple(majority_vertex(g, s, v) for v in range(g.n))
    if rule != HEAVEN:
        raise ValueError(f"unknown rule {rule!r}")
    hub = g.require_hub()
    bias = check_bias(g, tau)
    out = []
    for v in range(g.n):
        if v == hub:
            out.append(Opinion.GLORY)
            continue
        glory, gnash = _hub_forced_scores(g, s, v, hub)
        if bias is not None:
            glory += bias[v]
        out.append(Opinion.GLORY if glory >= gnash else Opinion.GNASH)
    return tuple(out)


class AsyncPassResult(NamedTuple):
    state: State
    covers_all_non_hubs: bool


def async_pass(
    g: InfluenceGraph,
    s: State,
    schedule: Iterable[int],
    tau: Optional[Sequence[int]] = None,
) -> AsyncPassResult:
    """Apply hub-forced updates in schedule order, each against the current state.

    Schedules may repeat or omit vertices; coverage of the non-hubs is
    reported, not enforced.  Hub entries set the hub to Glory.  The hub's
    stored coordinate is rewritten to Glory as soon as the pass touches its
    first vertex, so stored and forced views agree from then on; an empty
    schedule leaves the state untouched.
    """
    hub = g.require_hub()
    check_state(g, s)
    bias = check_bias(g, tau)
    schedule = list(schedule)
    for v in schedule:
        if not 0 <= v < g.n:
            raise ValueError(f"schedule entry {v} out of range for n={g.n}")
    work = list(s)
    if schedule:
        work[hub] = Opinion.GLORY
    for v in schedule:
        if v == hub:
            continue
        glory, gnash = _hub_forced_scores(g, work, v, hub)
        if bias is not None:
            glory += bias[v]
        work[v] = Opinion.GLORY if glory >= gnash else Opinion.GNASH
    covers = set(schedule).issuperset(g.non_hubs())
    return AsyncPassResult(tuple(work), covers)


@dataclass(frozen=True)
class TrajectoryResult:
    """Synchronous trajectory up to the first repeated state.

    ``states`` holds the start state and every new state reached;
    ``cycle_length`` is 1 for fixed points and None when truncated.
    """

    states: tuple[State, ...]
    outcome: str  # "fixed_point" | "cycle" | "truncated"
    cycle_length: Optional[int]


def trajectory(
    g: InfluenceGraph,
    s0: State,
    rule: str = HEAVEN,
    tau: Optional[Sequence[int]] = None,
    max_steps: int = 1,
) -> TrajectoryResult:
    """Iterate sync_step from s0, stopping at the first repeat or at max_steps.

    Repeats are detected against every previously seen state, so the state
    space (2^n) should stay small; intended for n <= 24.
    """
    if max_steps < 1:
        raise ValueError(f"max_steps must be >= 1, got {max_steps}")
    check_state(g, s0)
    s0 = tuple(s0)
    seen = {s0: 0}
    states = [s0]
    current = s0
    for step in range(1, max_steps + 1):
        current = sync_step(g, current, rule=rule, tau=tau)
        if current in seen:
            length = step - seen[current]
            outcome = "fixed_point" if length == 1 else "cycle"
            return TrajectoryResult(tuple(states), outcome, length)
        seen[current] = step
        states.append(current)
    return TrajectoryResult(tuple(states), "truncated", None)
