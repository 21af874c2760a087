"""Run a registry of attacks against a planted instance and score the results.

Attacks see only the public graph, the public parameters and their own
child seed. The hidden clique is used for scoring after the attack returns.
"""

from __future__ import annotations

import math
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .budget import Budget
from .dekel import DekelConfig, dekel_attack
from .feige import FeigeConfig, feige_attack
from .graph import Graph, VertexSet, check_vertices, is_clique
from .greedy import GreedyConfig, greedy_attack
from .instance import PlantedInstance, PlantParams, owf_evaluate, sample_gnp
from .metropolis import MetropolisConfig, run_chain
from .oracle import brute_force_attack
from .rng import RngState
from .spectral import SpectralConfig, spectral_boosted_attack

DEFAULT_SECONDS = 60.0

# (graph, params, rng, limits, options) -> (candidate or None, steps)
AttackFn = Callable[[Graph, PlantParams, RngState, Budget, dict], "tuple[VertexSet | None, int]"]


def _greedy(g, params, r, limits, opts):
    restarts = int(opts.get("restarts", 1))
    return greedy_attack(g, GreedyConfig(restarts=restarts), r), restarts


def _metropolis(g, params, r, limits, opts):
    cfg = MetropolisConfig(
        temperature=float(opts.get("temperature", 2.0)),
        max_steps=opts.get("max_steps"),
        target_size=params.k or None,
    )
    result, _ = run_chain(g, cfg, r, limits)
    return result.best, result.steps


def _spectral(g, params, r, limits, opts):
    if params.k < 1 or g.n < 2:
        return None, 0
    out = spectral_boosted_attack(g, SpectralConfig(k=params.k, c_boost=bool(opts.get("c_boost", True))), opts.get("subset_budget"), limits)
    return out.clique, out.examined


def _dekel(g, params, r, limits, opts):
    cfg = DekelConfig(
        k=params.k,
        p=params.p,
        alpha=float(opts.get("alpha", 0.5)),
        beta=float(opts.get("beta", 1.3)),
    )
    out = dekel_attack(g, cfg, r, limits)
    return out.clique, out.trace.iterations


def _feige(g, params, r, limits, opts):
    ratio = max(1.0, g.n / params.k) if params.k else 1.0
    t = int(opts.get("t", 2))
    if opts.get("asymptotic_t"):
        t = FeigeConfig.asymptotic_t(g.n)
    out = feige_attack(g, FeigeConfig(density_ratio=float(opts.get("density_ratio", ratio)), t=t), limits)
    return out.clique, out.examined


def _brute(g, params, r, limits, opts):
    out = brute_force_attack(g, params.k, opts.get("max_steps"), limits)
    return out.clique, out.examined


ATTACKS: dict[str, AttackFn] = {
    "greedy": _greedy,
    "metropolis": _metropolis,
    "spectral": _spectral,
    "dekel": _dekel,
    "feige": _feige,
    "brute": _brute,
}


@dataclass
class AttackSpec:
    name: str
    options: dict = field(default_factory=dict)
    seconds: float | None = DEFAULT_SECONDS
    max_steps: int | None = None
    label: str | None = None

    def __post_init__(self) -> None:
        if self.name not in ATTACKS:
            raise ValueError(f"unknown attack {self.name!r}; choose from {', '.join(ATTACKS)}")

    @property
    def key(self) -> str:
        return self.label or self.name


def make_registry(names, seconds: float | None = DEFAULT_SECONDS) -> list[AttackSpec]:
    """Specs for the given attack names; ``all`` expands to every attack."""
    out: list[AttackSpec] = []
    for name in names:
        for item in ATTACKS if name == "all" else [name]:
            if all(s.name != item for s in out):
                out.append(AttackSpec(item, seconds=seconds))
    return out


@dataclass(frozen=True)
class AttackReport:
    attack_name: str
    candidate: VertexSet | None
    is_valid_clique: bool
    size: int
    inverted: bool
    matched_hidden: bool
    wall_time: float
    steps: int
    seed: int
    error: str | None = None

    def __post_init__(self) -> None:
        assert not self.inverted or self.is_valid_clique
        assert not self.matched_hidden or self.inverted

    def record(self, timings: bool = False) -> dict:
        rec = {
            "attack": self.attack_name,
            "candidate": list(self.candidate) if self.candidate is not None else None,
            "is_valid_clique": self.is_valid_clique,
            "size": self.size,
            "inverted": self.inverted,
            "matched_hidden": self.matched_hidden,
            "steps": self.steps,
            "seed": self.seed,
            "error": self.error,
        }
        if timings:
            rec["wall_time"] = self.wall_time
        return rec


def invert_check(instance: PlantedInstance, candidate: VertexSet) -> bool:
    """True iff replanting ``candidate`` leaves the public graph unchanged and it has at least k vertices."""
    check_vertices(instance.public_graph, candidate)
    return len(set(candidate)) >= instance.params.k and is_clique(instance.public_graph, candidate)


def _run_one(spec: AttackSpec, instance: PlantedInstance, r: RngState) -> AttackReport:
    g = instance.public_graph
    limits = Budget(seconds=spec.seconds, max_steps=spec.max_steps)
    start = time.perf_counter()
    error = None
    candidate: VertexSet | None = None
    steps = 0
    try:
        candidate, steps = ATTACKS[spec.name](g, instance.params, r, limits, spec.options)
    except Exception as exc:  # a crashing attack is a failed report
        error = f"{type(exc).__name__}: {exc}"
        candidate = None
    elapsed = time.perf_counter() - start
    if candidate is not None:
        candidate = tuple(sorted(candidate))
        try:
            check_vertices(g, candidate)
            valid = is_clique(g, candidate)
        except ValueError as exc:
            error, valid = f"{type(exc).__name__}: {exc}", False
    else:
        valid = False
    inverted = valid and invert_check(instance, candidate)
    matched = inverted and instance.params.k > 0 and candidate == tuple(instance.hidden_clique)
    return AttackReport(
        attack_name=spec.key,
        candidate=candidate,
        is_valid_clique=valid,
        size=len(candidate) if candidate is not None else 0,
        inverted=inverted,
        matched_hidden=matched,
        wall_time=elapsed,
        steps=int(steps),
        seed=r.seed,
        error=error,
    )


def run_all(
    instance: PlantedInstance,
    registry: list[AttackSpec],
    r: RngState,
    threads: int = 1,
) -> tuple[VertexSet, list[AttackReport]]:
    """Run every attack; best is the largest valid clique, earlier registry entries winning ties."""
    if not registry:
        raise ValueError("registry must not be empty")
    seeds = [r.child(f"attack/{spec.key}") for spec in registry]
    if threads > 1 and len(registry) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda pair: _run_one(pair[0], instance, pair[1]), zip(registry, seeds)))
    else:
        reports = [_run_one(spec, instance, seed) for spec, seed in zip(registry, seeds)]
    best: VertexSet = ()
    for rep in reports:
        if rep.is_valid_clique and rep.size > len(best):
            best = rep.candidate
    assert len(best) == max((rep.size for rep in reports if rep.is_valid_clique), default=0)
    return best, reports


@dataclass(frozen=True)
class AttackStats:
    name: str
    success_rate: float
    matched_rate: float
    sizes: tuple[int, ...]
    mean_time: float

    @property
    def mean_size(self) -> float:
        return statistics.fmean(self.sizes) if self.sizes else 0.0


@dataclass
class ExperimentSummary:
    params: PlantParams
    trials: int
    stats: list[AttackStats]
    best_attack: str | None
    reports: list[list[AttackReport]] = field(default_factory=list)
    seeds: list[int] = field(default_factory=list)

    def rate(self, name: str) -> float:
        return next(s.success_rate for s in self.stats if s.name == name)

    def records(self, timings: bool = False) -> list[dict]:
        out = []
        for st in self.stats:
            rec = {
                "attack": st.name,
                "n": self.params.n,
                "p": self.params.p,
                "k": self.params.k,
                "trials": self.trials,
                "success_rate": st.success_rate,
                "matched_rate": st.matched_rate,
                "mean_size": st.mean_size,
            }
            if timings:
                rec["mean_time"] = st.mean_time
            out.append(rec)
        return out


def _summarise(params: PlantParams, registry: list[AttackSpec], per_trial: list[list[AttackReport]], seeds: list[int]) -> ExperimentSummary:
    trials = len(per_trial)
    stats = []
    for i, spec in enumerate(registry):
        col = [reports[i] for reports in per_trial]
        stats.append(
            AttackStats(
                name=spec.key,
                success_rate=sum(rep.inverted for rep in col) / trials,
                matched_rate=sum(rep.matched_hidden for rep in col) / trials,
                sizes=tuple(rep.size for rep in col),
                mean_time=statistics.fmean(rep.wall_time for rep in col),
            )
        )
    best = None
    for st in stats:
        if best is None or st.success_rate > best.success_rate:
            best = st
    return ExperimentSummary(params, trials, stats, best.name if best else None, per_trial, seeds)


def run_experiment(
    params: PlantParams,
    trials: int,
    registry: list[AttackSpec],
    r: RngState,
    threads: int = 1,
) -> ExperimentSummary:
    """``trials`` fresh instances from derived seeds, each attacked by the whole registry."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    per_trial, seeds = [], []
    for t in range(trials):
        tr = r.child(f"trial/{t}")
        instance = owf_evaluate(params, tr.child("sampler"))
        per_trial.append(run_all(instance, registry, tr.child("attacks"), threads)[1])
        seeds.append(tr.seed)
    return _summarise(params, registry, per_trial, seeds)


@dataclass(frozen=True)
class GameSummary:
    trials: int
    planted_trials: int
    accuracy: float
    guessed_planted_when_planted: float
    guessed_planted_when_unplanted: float
    inversion_rate: float

    @property
    def advantage(self) -> float:
        return self.guessed_planted_when_planted - self.guessed_planted_when_unplanted

    def record(self) -> dict:
        return {
            "trials": self.trials,
            "planted_trials": self.planted_trials,
            "accuracy": self.accuracy,
            "advantage": self.advantage,
            "inversion_rate": self.inversion_rate,
        }


def run_distinguisher_game(
    params: PlantParams,
    trials: int,
    registry: list[AttackSpec],
    r: RngState,
    threads: int = 1,
) -> GameSummary:
    """Coin-flip game: planted or plain G(n, p); guess "planted" iff some attack finds a k-clique.

    Raw rates are reported; the analyst decides how to relate them to inversion.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    correct = planted = hit_planted = hit_plain = inverted = 0
    for t in range(trials):
        tr = r.child(f"trial/{t}")
        coin = tr.child("coin").next_bernoulli(0.5)
        if coin:
            instance = owf_evaluate(params, tr.child("sampler"))
        else:
            g = sample_gnp(params.n, params.p, tr.child("sampler").child("graph"))
            instance = PlantedInstance(g, (), params, tr.seed)
        _, reports = run_all(instance, registry, tr.child("attacks"), threads)
        guess = any(rep.inverted for rep in reports)
        planted += coin
        correct += guess == coin
        if coin:
            hit_planted += guess
            inverted += guess
        else:
            hit_plain += guess
    unplanted = trials - planted
    return GameSummary(
        trials=trials,
        planted_trials=planted,
        accuracy=correct / trials,
        guessed_planted_when_planted=hit_planted / planted if planted else math.nan,
        guessed_planted_when_unplanted=hit_plain / unplanted if unplanted else math.nan,
        inversion_rate=inverted / planted if planted else math.nan,
    )
