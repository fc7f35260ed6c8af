"""Command-line interface.

Exit codes are a contract: 0 success (certified / sufficient), 1 a clean
negative verdict, 2 usage or parse errors.  Human output goes to stdout,
diagnostics to stderr.  The HUBFORCE_SEED environment variable overrides the
sweep config's rng_seed (and is itself overridden by --rng-seed).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import replace

from .certify import CertReport, SeedReport, certify, seed_check, tau_threshold
from .dynamics import (
    HEAVEN,
    MAJORITY,
    all_glory,
    all_gnash,
    async_pass,
    state_from_string,
    state_to_string,
    sync_step,
    trajectory,
)
from .examples import EXAMPLE_NAMES, example_graph
from .experiments import (
    ExperimentConfig,
    WSweep,
    emit_results,
    load_config,
    run_sweep,
)
from .graph import GraphError, InfluenceGraph, load_graph, serialize_graph
from .oracle import run_equivalence_suite

STEP_CAP = 2**20


def _load_bias(path: str, n: int) -> tuple[int, ...]:
    # One integer per vertex, whitespace separated, '#' starts a comment.
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for token in line.split():
            try:
                values.append(int(token))
            except ValueError:
                raise ValueError(f"{path}: line {lineno}: non-integer bias {token!r}") from None
    if len(values) != n:
        raise ValueError(f"{path}: expected {n} bias values, got {len(values)}")
    return tuple(values)


def _parse_state(text: str, g: InfluenceGraph):
    if text == "all-G":
        return all_glory(g.n)
    if text == "all-N":
        return all_gnash(g.n)
    state = state_from_string(text)
    if len(state) != g.n:
        raise ValueError(f"state string has length {len(state)}, graph has {g.n} vertices")
    return state


def _parse_vertex_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise ValueError(f"expected comma-separated vertex ids, got {text!r}") from None


def _print_cert_report(report: CertReport) -> None:
    print("vertex  hub_weight  rest_weight  tau  dominated")
    for pv in report.per_vertex:
        mark = "yes" if pv.dominated else "NO"
        print(f"{pv.vertex:>6}  {pv.hub_weight:>10}  {pv.rest_weight:>11}  {pv.tau:>3}  {mark}")
    verdict = "true" if report.passed else "false"
    print(
        f"pass={verdict} max_rest={report.max_rest} w_star={report.w_star} "
        f"w_star_tau={report.w_star_tau} coarse_bound={report.coarse_bound}"
    )


def _print_seed_report(report: SeedReport) -> None:
    print("vertex  hub_weight  from_seed  rest_outside  holds")
    for pv in report.per_vertex:
        mark = "yes" if pv.holds else "NO"
        print(
            f"{pv.vertex:>6}  {pv.hub_weight:>10}  {pv.weight_from_seed:>9}  "
            f"{pv.rest_outside_seed:>12}  {mark}"
        )
    print(f"sufficient={'true' if report.sufficient else 'false'}")


def cmd_certify(args) -> int:
    g = load_graph(args.graph)
    tau = _load_bias(args.tau, g.n) if args.tau else None
    report = certify(g, tau)
    if args.json:
        print(json.dumps(report.to_json_obj(), indent=2))
    else:
        _print_cert_report(report)
        failing = report.failing_vertices()
        if failing:
            print(f"failing vertices: {', '.join(map(str, failing))}", file=sys.stderr)
    return 0 if report.passed else 1


def cmd_threshold(args) -> int:
    g = load_graph(args.graph)
    tau = _load_bias(args.tau, g.n) if args.tau else None
    report = certify(g, tau)
    w_star_tau = tau_threshold(g, tau) if tau is not None else None
    if args.json:
        obj = {
            "max_rest": report.max_rest,
            "w_star": report.w_star,
            "w_star_tau": w_star_tau,
            "coarse_bound": report.coarse_bound,
        }
        print(json.dumps(obj, indent=2))
    else:
        print(f"max_rest={report.max_rest}")
        print(f"w_star={report.w_star}")
        if w_star_tau is not None:
            print(f"w_star_tau={w_star_tau}")
        print(f"coarse_bound={report.coarse_bound}")
    return 0


def cmd_step(args) -> int:
    g = load_graph(args.graph)
    tau = _load_bias(args.tau, g.n) if args.tau else None
    state = _parse_state(args.state, g)
    print(state_to_string(sync_step(g, state, rule=args.rule, tau=tau)))
    return 0


def cmd_run(args) -> int:
    g = load_graph(args.graph)
    tau = _load_bias(args.tau, g.n) if args.tau else None
    state = _parse_state(args.state, g)
    if args.schedule is not None:
        if args.rule != HEAVEN:
            raise ValueError("--schedule requires the heaven rule")
        result = async_pass(g, state, _parse_vertex_list(args.schedule), tau)
        print(state_to_string(result.state))
        print(f"covers_all_non_hubs={'true' if result.covers_all_non_hubs else 'false'}")
        return 0
    steps = args.steps
    if steps < 1:
        raise ValueError(f"--steps must be >= 1, got {steps}")
    steps = min(steps, STEP_CAP)
    traj = trajectory(g, state, rule=args.rule, tau=tau, max_steps=steps)
    for s in traj.states[1:]:
        print(state_to_string(s))
    if traj.outcome == "truncated":
        print("truncated")
    else:
        repeat = traj.states[len(traj.states) - traj.cycle_length]
        print(state_to_string(repeat))
        if traj.outcome == "fixed_point":
            print("fixed_point")
        else:
            print(f"cycle length {traj.cycle_length}")
    return 0


def cmd_sweep(args) -> int:
    cfg = load_config(args.config) if args.config else ExperimentConfig()
    env_seed = os.environ.get("HUBFORCE_SEED")
    if env_seed is not None:
        try:
            cfg = replace(cfg, rng_seed=int(env_seed))
        except ValueError:
            raise ValueError(f"HUBFORCE_SEED must be an integer, got {env_seed!r}") from None
    overrides = {}
    for name in ("n", "edge_prob", "weight_min", "weight_max", "async_trials", "rng_seed"):
        value = getattr(args, name)
        if value is not None:
            overrides[name] = value
    if args.w_start is not None or args.w_stop is not None or args.w_step is not None:
        sweep = cfg.w_sweep
        overrides["w_sweep"] = WSweep(
            sweep.start if args.w_start is None else args.w_start,
            sweep.stop if args.w_stop is None else args.w_stop,
            sweep.step if args.w_step is None else args.w_step,
        )
    if overrides:
        cfg = replace(cfg, **overrides)
    result = run_sweep(cfg)
    emit_results(result, args.format, args.out)
    print(
        f"max_rest={result.max_rest} coarse_bound={result.coarse_bound}",
        file=sys.stderr,
    )
    met = [row.w for row in result.rows if row.at_or_above_threshold]
    if met:
        print(f"threshold met from W={met[0]}", file=sys.stderr)
    else:
        print("threshold not reached in sweep range", file=sys.stderr)
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def cmd_seed_check(args) -> int:
    g = load_graph(args.graph)
    report = seed_check(g, _parse_vertex_list(args.seed))
    if args.json:
        print(json.dumps(report.to_json_obj(), indent=2))
    else:
        _print_seed_report(report)
    return 0 if report.sufficient else 1


def cmd_example(args) -> int:
    g = example_graph(args.name, args.W)
    print(serialize_graph(g), end="")
    return 0


def cmd_oracle_check(args) -> int:
    summary = run_equivalence_suite(count=args.graphs, seed=args.seed)
    print(
        f"graphs={summary.graphs} checks={summary.checks} "
        f"mismatches={len(summary.mismatches)}"
    )
    for line in summary.mismatches:
        print(line, file=sys.stderr)
    return 0 if summary.ok else 1


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hubforce",
        description="Certify one-step hub-forced consensus and simulate the dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="run the domination certificate on a graph file")
    p.add_argument("graph")
    p.add_argument("--tau", help="per-vertex tie-bias file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("threshold", help="print the hub-strength thresholds")
    p.add_argument("graph")
    p.add_argument("--tau", help="per-vertex tie-bias file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("step", help="one synchronous update")
    p.add_argument("graph")
    p.add_argument("--state", required=True, help="G/N string, or all-G / all-N")
    p.add_argument("--rule", choices=(HEAVEN, MAJORITY), default=HEAVEN)
    p.add_argument("--tau", help="per-vertex tie-bias file")
    p.set_defaults(func=cmd_step)

    p = sub.add_parser("run", help="iterate updates or run one asynchronous pass")
    p.add_argument("graph")
    p.add_argument("--state", required=True, help="G/N string, or all-G / all-N")
    p.add_argument("--rule", choices=(HEAVEN, MAJORITY), default=HEAVEN)
    p.add_argument("--tau", help="per-vertex tie-bias file")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--steps", type=int, help=f"synchronous steps (capped at {STEP_CAP})")
    mode.add_argument("--schedule", help="comma-separated vertices for one async pass")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("sweep", help="run the uniform hub-weight sweep experiment")
    p.add_argument("config", nargs="?", help="JSON experiment config (defaults used if omitted)")
    p.add_argument("--out", required=True, help="output file path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--n", type=int)
    p.add_argument("--edge-prob", dest="edge_prob", type=float)
    p.add_argument("--weight-min", dest="weight_min", type=int)
    p.add_argument("--weight-max", dest="weight_max", type=int)
    p.add_argument("--w-start", dest="w_start", type=int)
    p.add_argument("--w-stop", dest="w_stop", type=int)
    p.add_argument("--w-step", dest="w_step", type=int)
    p.add_argument("--async-trials", dest="async_trials", type=int)
    p.add_argument("--rng-seed", dest="rng_seed", type=int)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("seed-check", help="check a Glory seed set for one-step persistence")
    p.add_argument("graph")
    p.add_argument("--seed", required=True, help="comma-separated non-hub vertex ids")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_seed_check)

    p = sub.add_parser("example", help="emit a built-in example graph")
    p.add_argument("name", choices=EXAMPLE_NAMES)
    p.add_argument("--W", type=int, help="hub broadcast weight (heaven only, default 2)")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("oracle-check", help="run the certification-vs-oracle equivalence suite")
    p.add_argument("--graphs", type=int, default=200)
    p.add_argument("--seed", type=int, default=1234)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="%(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
