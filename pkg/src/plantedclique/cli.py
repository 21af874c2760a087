"""Command-line entry point: gen, attack, advise, bench, oracle.

Exit codes: 0 success (or some attack inverted), 2 usage or input error,
3 attacks ran but none inverted. Vertices in all output are 1-based, as in
DIMACS files. Structured output is one JSON object per line with a
``schema`` field; wall times are left out unless ``--timings`` is given so
that repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import advisor
from .graph import GraphInputError, read_dimacs
from .harness import ATTACKS, make_registry, run_all, run_distinguisher_game, run_experiment
from .instance import PlantParams, load_instance, owf_evaluate, save_instance
from .oracle import max_clique_with_stats
from .rng import SEED_ENV_VAR, RngState, parse_seed, seed_from_env

SCHEMA = "plantedclique/1"
EXIT_OK, EXIT_USAGE, EXIT_NOT_INVERTED = 0, 2, 3


class UsageError(Exception):
    pass


def _emit(obj: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **obj}, sort_keys=True))


def _one_based(vs):
    return None if vs is None else [v + 1 for v in vs]


def _seed(args) -> int:
    try:
        return parse_seed(args.seed) if args.seed is not None else seed_from_env()
    except ValueError as exc:
        source = "--seed" if args.seed is not None else SEED_ENV_VAR
        raise UsageError(f"{source}: {exc}") from exc


def _params(n: int, p: float, k: int) -> PlantParams:
    try:
        return PlantParams(n, p, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _algs(raw: list[str] | None) -> list[str]:
    names = raw or ["all"]
    for name in names:
        if name != "all" and name not in ATTACKS:
            raise UsageError(f"unknown attack {name!r}; choose from {', '.join([*ATTACKS, 'all'])}")
    return names


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [[str(c) for c in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h) for i, h in enumerate(headers)]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    out += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(out)


def cmd_gen(args) -> int:
    params = _params(args.n, args.p, args.k)
    if params.k == 0:
        print("warning: k = 0, writing an unplanted G(n, p) sample", file=sys.stderr)
    seed = _seed(args)
    inst = owf_evaluate(params, RngState(seed))
    save_instance(inst, args.out)
    eps = params.epsilon
    if args.json:
        _emit({"type": "instance", "n": params.n, "p": params.p, "k": params.k, "epsilon": eps, "seed": seed, "label": params.label})
    else:
        eps_text = "undefined" if eps is None else f"{eps:.4f}"
        print(f"wrote {args.out}: n={params.n} p={params.p:g} k={params.k} epsilon={eps_text} ({params.label}) seed={seed}")
    return EXIT_OK


def cmd_attack(args) -> int:
    try:
        inst = load_instance(args.input)
    except (OSError, GraphInputError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read instance {args.input}: {exc}") from exc
    registry = make_registry(_algs(args.alg), seconds=args.budget_secs)
    best, reports = run_all(inst, registry, RngState(_seed(args)), threads=args.threads)
    inverted = any(r.inverted for r in reports)
    if args.json:
        for rep in reports:
            rec = rep.record(args.timings)
            rec["candidate"] = _one_based(rep.candidate)
            _emit({"type": "report", "n": inst.params.n, "p": inst.params.p, "k": inst.params.k, **rec})
        _emit({"type": "best", "clique": _one_based(best), "size": len(best), "inverted": inverted})
    else:
        rows = []
        for rep in reports:
            row = [rep.attack_name, rep.size, rep.is_valid_clique, rep.inverted, rep.matched_hidden, rep.steps]
            if args.timings:
                row.append(f"{rep.wall_time:.3f}")
            row.append(rep.error or "")
            rows.append(row)
        headers = ["attack", "size", "clique", "inverted", "matched", "steps"] + (["seconds"] if args.timings else []) + ["error"]
        print(_table(headers, rows))
        print(f"best clique size {len(best)} (k = {inst.params.k}); inverted: {'yes' if inverted else 'no'}")
    return EXIT_OK if inverted else EXIT_NOT_INVERTED


def cmd_advise(args) -> int:
    try:
        level = advisor.SecurityLevel(args.lam)
        rows = advisor.advise(level, args.p, args.q, args.r_eps)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        for row in rows:
            _emit({"type": "recommendation", "lambda": args.lam, **row.record()})
    else:
        print(advisor.render_table(rows))
        combined = rows[-1].min_n
        print(f"\nstorage for n = {combined}: {advisor.storage_estimate(combined, args.p)} bytes as a bit matrix")
    return EXIT_OK


def cmd_bench(args) -> int:
    params = _params(args.n, args.p, args.k)
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    registry = make_registry(_algs(args.alg), seconds=args.budget_secs)
    root = RngState(_seed(args))
    if args.game:
        game = run_distinguisher_game(params, args.trials, registry, root, threads=args.threads)
        if args.json:
            _emit({"type": "game", **game.record()})
        else:
            print(_table(list(game.record()), [list(game.record().values())]))
        return EXIT_OK
    summary = run_experiment(params, args.trials, registry, root, threads=args.threads)
    trial_rows = []
    for t, (seed, reports) in enumerate(zip(summary.seeds, summary.reports)):
        for rep in reports:
            row = {"trial": t, "trial_seed": seed, "attack": rep.attack_name, "inverted": rep.inverted,
                   "matched_hidden": rep.matched_hidden, "size": rep.size, "steps": rep.steps}
            if args.timings:
                row["wall_time"] = rep.wall_time
            trial_rows.append(row)
    records = summary.records(args.timings)
    if args.json:
        for row in trial_rows:
            _emit({"type": "trial", **row})
        for rec in records:
            _emit({"type": "summary", **rec})
    else:
        headers = ["attack", "trials", "success_rate", "matched_rate", "mean_size"] + (["mean_time"] if args.timings else [])
        print(_table(headers, [[rec[h] if not isinstance(rec[h], float) else f"{rec[h]:.4f}" for h in headers] for rec in records]))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(records[0]))
            writer.writeheader()
            writer.writerows(records)
    if args.trials_csv:
        with open(args.trials_csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(trial_rows[0]))
            writer.writeheader()
            writer.writerows(trial_rows)
    return EXIT_OK


def _read_graph(path: str):
    text = Path(path).read_text()
    if text.lstrip().startswith("[metadata]"):
        return load_instance(path).public_graph
    return read_dimacs(text.splitlines())


def cmd_oracle(args) -> int:
    try:
        g = _read_graph(args.input)
    except (OSError, GraphInputError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read graph {args.input}: {exc}") from exc
    if g.n > args.max_n:
        raise UsageError(f"graph has {g.n} vertices; the exact oracle is limited to --max-n {args.max_n}")
    clique, nodes = max_clique_with_stats(g)
    if args.json:
        _emit({"type": "oracle", "n": g.n, "clique": _one_based(clique), "size": len(clique), "nodes": nodes})
    else:
        print(f"maximum clique size {len(clique)}: {' '.join(map(str, _one_based(clique)))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plantedclique", description="Planted-clique instance generator and attack workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=True, threads=False):
        p.add_argument("--json", action="store_true", help="line-delimited JSON output")
        if seed:
            p.add_argument("--seed", help=f"root seed (decimal, 64-bit); falls back to ${SEED_ENV_VAR}, then 0")
        if threads:
            p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
            p.add_argument("--budget-secs", type=float, default=60.0, help="per-attack wall-clock budget")
            p.add_argument("--timings", action="store_true", help="include wall times (breaks byte-identical output)")
            p.add_argument("--alg", action="append", help="attack name or 'all'; repeatable")

    g = sub.add_parser("gen", help="sample a planted instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--out", required=True)
    common(g)
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("attack", help="run attacks on an instance file")
    a.add_argument("--in", dest="input", required=True)
    common(a, threads=True)
    a.set_defaults(func=cmd_attack)

    v = sub.add_parser("advise", help="print minimum-size recommendations")
    v.add_argument("--lambda", dest="lam", type=int, required=True)
    v.add_argument("--p", type=float, default=0.5)
    v.add_argument("--q", type=float, default=0.5)
    v.add_argument("--r-eps", type=float, default=1.0)
    common(v, seed=False)
    v.set_defaults(func=cmd_advise)

    b = sub.add_parser("bench", help="repeated trials with summary statistics")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--p", type=float, default=0.5)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--trials", type=int, default=10)
    b.add_argument("--csv", help="write summary rows to this CSV file")
    b.add_argument("--trials-csv", help="write per-trial rows to this CSV file")
    b.add_argument("--game", action="store_true", help="planted-or-not distinguishing game")
    common(b, threads=True)
    b.set_defaults(func=cmd_bench)

    o = sub.add_parser("oracle", help="exact maximum clique of a small graph")
    o.add_argument("--in", dest="input", required=True, help="DIMACS or instance file")
    o.add_argument("--max-n", type=int, default=400)
    common(o, seed=False)
    o.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
