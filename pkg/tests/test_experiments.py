import json

import pytest

from hubforce import (
    ExperimentConfig,
    SweepRow,
    WSweep,
    attach_uniform_hub,
    build_graph,
    emit_results,
    gen_random_graph,
    heaven,
    run_sweep,
)
from hubforce.experiments import (
    config_from_json_obj,
    load_config,
    results_to_csv,
    rows_from_json_obj,
    sweep_graph,
)


# --- config ---


def test_config_defaults_match_reference_setup():
    cfg = ExperimentConfig()
    assert (cfg.n, cfg.edge_prob, cfg.weight_min, cfg.weight_max, cfg.async_trials) == (
        50,
        0.1,
        1,
        10,
        100,
    )


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n": 0},
        {"edge_prob": 1.5},
        {"edge_prob": -0.1},
        {"weight_min": 0},
        {"weight_min": 5, "weight_max": 4},
        {"async_trials": 0},
        {"rng_seed": -1},
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        ExperimentConfig(**kwargs)


def test_wsweep_validation():
    with pytest.raises(ValueError):
        WSweep(3, 2)
    with pytest.raises(ValueError):
        WSweep(0, 4, 0)
    with pytest.raises(ValueError):
        WSweep(-1, 4)
    assert list(WSweep(2, 8, 3).values()) == [2, 5, 8]


def test_config_json_roundtrip(tmp_path):
    cfg = ExperimentConfig(n=10, edge_prob=0.4, w_sweep=WSweep(1, 4, 1), rng_seed=9)
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg.to_json_obj()))
    assert load_config(str(path)) == cfg


def test_config_rejects_unknown_keys():
    with pytest.raises(ValueError):
        config_from_json_obj({"n": 5, "edge_probability": 0.1})


def test_config_rejects_wrong_types():
    with pytest.raises(ValueError):
        config_from_json_obj({"n": 8.0})
    with pytest.raises(ValueError):
        config_from_json_obj({"rng_seed": "abc"})
    with pytest.raises(ValueError):
        config_from_json_obj({"edge_prob": "high"})
    with pytest.raises(ValueError):
        config_from_json_obj({"w_sweep": {"start": 0, "stop": "ten"}})
    with pytest.raises(ValueError):
        config_from_json_obj({"w_sweep": [0, 10]})


# --- generation ---


def test_gen_edgeless_when_prob_zero():
    g = gen_random_graph(ExperimentConfig(n=10, edge_prob=0.0, rng_seed=1))
    assert g.num_edges == 0
    assert g.max_rest == 0


def test_gen_full_when_prob_one():
    g = gen_random_graph(
        ExperimentConfig(n=4, edge_prob=1.0, weight_min=1, weight_max=1, rng_seed=1)
    )
    assert all(g.rest_weight(v) == 2 for v in g.non_hubs())
    assert g.hub == 3
    assert all(u != g.hub and v != g.hub for u, v, _ in g.edges())


def test_gen_deterministic_and_independent_of_trials():
    a = gen_random_graph(ExperimentConfig(n=20, rng_seed=5, async_trials=100))
    b = gen_random_graph(ExperimentConfig(n=20, rng_seed=5, async_trials=7))
    c = gen_random_graph(ExperimentConfig(n=20, rng_seed=6))
    assert a == b
    assert a != c


def test_expected_rest_weight_magnitude():
    # mean rest weight ~= (n-2) * p * mean(weight) for the reference setup
    g = gen_random_graph(ExperimentConfig(rng_seed=12))
    rests = [g.rest_weight(v) for v in g.non_hubs()]
    mean = sum(rests) / len(rests)
    assert 15 < mean < 40


# --- attach_uniform_hub ---


def test_attach_reconstructs_heaven():
    assert attach_uniform_hub(heaven(0), 2) == heaven(2)


def test_attach_zero_removes_hub_edges(heaven2):
    g = attach_uniform_hub(heaven2, 0)
    assert all(g.hub_weight(v) == 0 for v in g.non_hubs())


def test_attach_idempotent(heaven2):
    assert attach_uniform_hub(attach_uniform_hub(heaven2, 3), 7) == attach_uniform_hub(
        heaven2, 7
    )


def test_attach_keeps_edges_into_hub():
    g = build_graph(3, 2, [(0, 2, 4), (0, 1, 1)])
    boosted = attach_uniform_hub(g, 5)
    assert boosted.weight(0, 2) == 4
    assert boosted.weight(2, 0) == boosted.weight(2, 1) == 5


# --- sweeps ---


def test_sweep_graph_heaven_transition_at_two(heaven2):
    rows = sweep_graph(heaven2, WSweep(0, 4), async_trials=20, rng_seed=3)
    assert [row.at_or_above_threshold for row in rows] == [False, False, True, True, True]
    for row in rows:
        assert (row.sync_fraction == 1.0) == (row.w >= 2)
        if row.at_or_above_threshold:
            assert row.async_success_rate == 1.0


def test_run_sweep_phase_transition_exact():
    cfg = ExperimentConfig(n=14, edge_prob=0.3, weight_max=5, async_trials=25, rng_seed=8)
    result = run_sweep(cfg)
    assert result.config.w_sweep.contains(result.max_rest)
    assert result.max_rest <= result.coarse_bound
    for row in result.rows:
        assert row.at_or_above_threshold == (row.w >= result.max_rest)
        assert (row.sync_fraction == 1.0) == row.at_or_above_threshold
        if row.at_or_above_threshold:
            assert row.async_success_rate == 1.0


def test_run_sweep_honours_explicit_range():
    cfg = ExperimentConfig(n=8, edge_prob=0.5, weight_max=4, async_trials=5, rng_seed=2)
    probe = run_sweep(cfg)
    explicit = WSweep(probe.max_rest - 1, probe.max_rest + 1)
    result = run_sweep(
        ExperimentConfig(
            n=8, edge_prob=0.5, weight_max=4, async_trials=5, rng_seed=2, w_sweep=explicit
        )
    )
    assert result.config.w_sweep == explicit
    assert [row.w for row in result.rows] == list(explicit.values())


def test_run_sweep_auto_brackets_when_range_misses(caplog):
    cfg = ExperimentConfig(n=10, edge_prob=0.5, weight_max=4, async_trials=5, rng_seed=4)
    with caplog.at_level("WARNING"):
        result = run_sweep(cfg)
    mr = result.max_rest
    assert result.config.w_sweep == WSweep(max(0, mr - 5), mr + 5)
    assert any("misses max_rest" in rec.message for rec in caplog.records)


def test_singleton_sweep_is_vacuous():
    result = run_sweep(ExperimentConfig(n=1, async_trials=2, rng_seed=0))
    assert all(row.sync_fraction == 1.0 and row.async_success_rate == 1.0 for row in result.rows)


# --- emission ---


def test_csv_shape_and_content(tmp_path, heaven2):
    from hubforce import SweepResult

    rows = sweep_graph(heaven2, WSweep(1, 3), async_trials=4, rng_seed=1)
    cfg = ExperimentConfig(n=5, edge_prob=0.0, async_trials=4, rng_seed=1, w_sweep=WSweep(1, 3))
    result = SweepResult(cfg, 2, 2, rows)
    path = tmp_path / "out.csv"
    emit_results(result, "csv", str(path))
    lines = path.read_text().splitlines()
    assert len(lines) == 4
    assert lines[0] == "W,sync_fraction,async_success_rate,at_or_above_threshold"
    assert lines[1].startswith("1,") and lines[1].endswith(",false")
    assert lines[2].startswith("2,") and lines[2].endswith(",true")


def test_json_roundtrip_rows(tmp_path):
    cfg = ExperimentConfig(n=8, edge_prob=0.4, weight_max=3, async_trials=5, rng_seed=6)
    result = run_sweep(cfg)
    path = tmp_path / "out.json"
    emit_results(result, "json", str(path))
    obj = json.loads(path.read_text())
    assert rows_from_json_obj(obj) == result.rows
    assert obj["metadata"]["max_rest"] == result.max_rest
    assert obj["metadata"]["coarse_bound"] == result.coarse_bound


def test_emit_rejects_bad_input(tmp_path):
    from hubforce import SweepResult

    cfg = ExperimentConfig(n=4, edge_prob=0.0, async_trials=1, rng_seed=0)
    result = run_sweep(cfg)
    with pytest.raises(ValueError):
        emit_results(result, "yaml", str(tmp_path / "x"))
    empty = SweepResult(result.config, 0, 0, ())
    with pytest.raises(ValueError):
        emit_results(empty, "csv", str(tmp_path / "x"))


def test_csv_byte_identical_reruns(tmp_path):
    cfg = ExperimentConfig(n=12, edge_prob=0.3, weight_max=6, async_trials=10, rng_seed=21)
    first = results_to_csv(run_sweep(cfg))
    second = results_to_csv(run_sweep(cfg))
    assert first == second


def test_sweep_row_json_uses_capital_w():
    row = SweepRow(3, 0.5, 1.0, False)
    assert row.to_json_obj() == {
        "W": 3,
        "sync_fraction": 0.5,
        "async_success_rate": 1.0,
        "at_or_above_threshold": False,
    }
