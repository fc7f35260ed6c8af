import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hubforce import (
    HubRequiredError,
    Opinion,
    all_glory,
    all_gnash,
    async_pass,
    attach_uniform_hub,
    build_graph,
    force_hub,
    heaven,
    majority_vertex,
    next_vertex,
    score,
    state_from_string,
    state_to_string,
    sync_step,
    trajectory,
)
from hubforce.dynamics import check_bias

from conftest import graph_and_state, small_corpus

G = Opinion.GLORY
N = Opinion.GNASH


def test_state_string_roundtrip():
    s = state_from_string("GNGN")
    assert s == (G, N, G, N)
    assert state_to_string(s) == "GNGN"
    with pytest.raises(ValueError):
        state_from_string("GNX")


def test_check_bias_rejects_bad_vectors(heaven2):
    with pytest.raises(ValueError):
        check_bias(heaven2, (0, 0, 0))
    with pytest.raises(ValueError):
        check_bias(heaven2, (0, 0, -1, 0, 0))
    assert check_bias(heaven2, None) is None


# --- score ---


def test_score_from_all_gnash_forced():
    g = heaven(3)
    s = force_hub(g, all_gnash(5))
    assert score(g, s, 0, G) == 3
    assert score(g, s, 0, N) == 2


def test_score_all_glory_has_no_gnash(heaven2):
    for v in range(5):
        assert score(heaven2, all_glory(5), v, N) == 0


def test_score_rejects_wrong_length(heaven2):
    with pytest.raises(ValueError):
        score(heaven2, all_gnash(4), 0, G)


# --- force_hub ---


def test_force_hub_flips_only_hub(heaven2):
    forced = force_hub(heaven2, all_gnash(5))
    assert forced == (N, N, N, N, G)
    assert force_hub(heaven2, all_glory(5)) == all_glory(5)


def test_force_hub_requires_hub(hell):
    with pytest.raises(HubRequiredError):
        force_hub(hell, all_gnash(4))


@given(graph_and_state(with_hub=True))
def test_force_hub_idempotent(gs):
    g, s = gs
    once = force_hub(g, s)
    assert force_hub(g, once) == once


# --- per-vertex rules ---


def test_next_vertex_weak_and_strong_hub():
    assert next_vertex(heaven(1), all_gnash(5), 0) is N
    assert next_vertex(heaven(2), all_gnash(5), 0) is G


def test_next_vertex_bias_rescues_weak_hub():
    tau = (1, 1, 1, 1, 0)
    assert next_vertex(heaven(1), all_gnash(5), 0, tau) is G


def test_next_vertex_hub_always_glory(heaven1):
    for s in itertools.product([G, N], repeat=5):
        assert next_vertex(heaven1, s, 4) is G


def test_majority_vertex_hellc4(hell):
    s0 = state_from_string("GNGN")
    assert majority_vertex(hell, s0, 0) is N  # scores (0, 2)
    assert majority_vertex(hell, s0, 1) is G  # scores (2, 0)


def test_majority_isolated_vertex_tie_to_glory():
    g = build_graph(2, None, [(0, 1, 1)])
    assert majority_vertex(g, (N, N), 0) is G  # no in-edges, 0 >= 0


# --- sync_step ---


def test_sync_step_hellc4_two_cycle(hell):
    s0 = state_from_string("GNGN")
    s1 = sync_step(hell, s0, rule="majority")
    assert state_to_string(s1) == "NGNG"
    assert sync_step(hell, s1, rule="majority") == s0


def test_sync_step_strong_hub_from_all_16_states(heaven2):
    for bits in itertools.product([G, N], repeat=4):
        s = bits + (N,)
        assert sync_step(heaven2, s) == all_glory(5)


@given(graph_and_state(with_hub=True))
def test_all_glory_fixed_point(gs):
    g, _ = gs
    assert sync_step(g, all_glory(g.n)) == all_glory(g.n)
    tau = tuple(range(g.n))
    assert sync_step(g, all_glory(g.n), tau=tau) == all_glory(g.n)


@given(graph_and_state(with_hub=True))
def test_sync_step_pure_and_tau_zero_equals_unbiased(gs):
    g, s = gs
    out = sync_step(g, s)
    assert sync_step(g, s) == out
    assert sync_step(g, s, tau=(0,) * g.n) == out


def test_sync_step_rejects_unknown_rule(heaven2):
    with pytest.raises(ValueError):
        sync_step(heaven2, all_gnash(5), rule="chaos")
    with pytest.raises(ValueError):
        sync_step(heaven2, all_gnash(5), rule="majority", tau=(0,) * 5)


def test_sync_step_heaven_requires_hub(hell):
    with pytest.raises(HubRequiredError):
        sync_step(hell, all_gnash(4))


# --- score identities ---


@given(graph_and_state(with_hub=True))
def test_glory_score_decomposition(gs):
    g, s = gs
    hub = g.hub
    forced = force_hub(g, s)
    for v in range(g.n):
        non_hub_part = sum(
            w for u, w in g.in_edges(v) if u != hub and s[u] is G
        )
        assert score(g, forced, v, G) == g.hub_weight(v) + non_hub_part


@given(graph_and_state(with_hub=True))
def test_fundamental_score_bounds(gs):
    g, s = gs
    forced = force_hub(g, s)
    for v in range(g.n):
        assert score(g, forced, v, N) <= g.rest_weight(v)
        assert g.hub_weight(v) <= score(g, forced, v, G)


@given(graph_and_state(with_hub=True))
def test_all_gnash_exact_scores(gs):
    g, _ = gs
    forced = force_hub(g, all_gnash(g.n))
    for v in range(g.n):
        assert score(g, forced, v, G) == g.hub_weight(v)
        assert score(g, forced, v, N) == g.rest_weight(v)


@given(graph_and_state(with_hub=True), st.lists(st.integers(0, 5), min_size=8, max_size=8))
@settings(max_examples=60)
def test_domination_sufficiency_any_state(gs, raw_tau):
    g, s = gs
    tau = tuple(raw_tau[: g.n]) + (0,) * max(0, g.n - len(raw_tau))
    for v in g.non_hubs():
        if g.rest_weight(v) <= g.hub_weight(v):
            assert next_vertex(g, s, v) is G
        if g.rest_weight(v) <= g.hub_weight(v) + tau[v]:
            assert next_vertex(g, s, v, tau) is G


# --- async_pass ---


def test_async_pass_empty_schedule_unchanged(heaven2):
    result = async_pass(heaven2, all_gnash(5), [])
    assert result.state == all_gnash(5)
    assert not result.covers_all_non_hubs


def test_async_pass_weak_hub_trace_pinned(heaven1):
    # Regression: every update sees score 1 vs 2 and stays Gnash; the hub's
    # stored entry flips to Glory on first touch.
    result = async_pass(heaven1, all_gnash(5), [0, 1, 2, 3])
    assert state_to_string(result.state) == "NNNNG"
    assert result.covers_all_non_hubs


def test_async_pass_dominating_any_permutation(heaven2):
    import itertools as it

    for order in it.permutations(range(4)):
        result = async_pass(heaven2, all_gnash(5), order)
        assert result.state == all_glory(5)


def test_async_pass_repetitions_and_coverage_flag(heaven2):
    result = async_pass(heaven2, all_gnash(5), [0, 0, 1, 1])
    assert not result.covers_all_non_hubs
    assert result.state[0] is G and result.state[2] is N
    full = async_pass(heaven2, all_gnash(5), [0, 1, 2, 3, 2, 1, 0])
    assert full.covers_all_non_hubs and full.state == all_glory(5)


def test_async_pass_hub_entry_sets_glory(heaven1):
    result = async_pass(heaven1, all_gnash(5), [4])
    assert result.state == (N, N, N, N, G)


def test_async_pass_validates_schedule(heaven2):
    with pytest.raises(ValueError):
        async_pass(heaven2, all_gnash(5), [7])


def test_async_pass_certified_corpus_converges():
    from hubforce import uniform_threshold

    for g in small_corpus(count=12, seed=31):
        boosted = attach_uniform_hub(g, uniform_threshold(g))
        order = list(boosted.non_hubs())
        final = async_pass(boosted, all_gnash(g.n), order).state
        assert all(final[v] is G for v in boosted.non_hubs())


# --- trajectory ---


def test_trajectory_hellc4_cycle(hell):
    traj = trajectory(hell, state_from_string("GNGN"), rule="majority", max_steps=16)
    assert traj.outcome == "cycle"
    assert traj.cycle_length == 2
    assert [state_to_string(s) for s in traj.states] == ["GNGN", "NGNG"]


def test_trajectory_strong_hub_fixed_point(heaven2):
    traj = trajectory(heaven2, all_gnash(5), max_steps=16)
    assert traj.outcome == "fixed_point"
    assert traj.cycle_length == 1
    assert traj.states == (all_gnash(5), all_glory(5))


def test_trajectory_from_all_glory_immediate(heaven2):
    traj = trajectory(heaven2, all_glory(5), max_steps=4)
    assert traj.outcome == "fixed_point"
    assert traj.states == (all_glory(5),)


def test_trajectory_truncated(hell):
    traj = trajectory(hell, state_from_string("GNGN"), rule="majority", max_steps=1)
    assert traj.outcome == "truncated"
    assert traj.cycle_length is None


def test_trajectory_rejects_bad_max_steps(heaven2):
    with pytest.raises(ValueError):
        trajectory(heaven2, all_gnash(5), max_steps=0)
