"""Three-phase combinatorial recovery of a hidden clique of size c*sqrt(n).

Phase 1 repeatedly samples ``S`` (each vertex with probability ``alpha``)
and keeps the vertices outside ``S`` with unusually many neighbours in it.
Phase 2 reads off a core of the clique by degree in the final subgraph.
Phase 3 grows the core back to the whole clique in the original graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .budget import Budget, BudgetExceeded
from .graph import Graph, VertexSet, degrees_into, induced_subgraph, is_clique
from .rng import RngState


def normal_sf(x: float) -> float:
    """Complementary standard normal CDF."""
    return 0.5 * math.erfc(x / math.sqrt(2.0))


def survival_rate(alpha: float, beta: float, c: float, p: float) -> float:
    """Expected per-iteration survival factor of clique vertices."""
    return (1 - alpha) * normal_sf(beta - c * math.sqrt(alpha) * (1 - p) / math.sqrt(p * (1 - p)))


@dataclass(frozen=True)
class DekelConfig:
    k: int
    p: float = 0.5
    alpha: float = 0.5
    beta: float = 1.3
    t_max: int | None = None
    min_survivors: int = 0
    # Phase-2 threshold above p*|V(G_t)|, as a multiple of the estimated clique size.
    # None selects the midpoint (1 - p) / 2 between clique and non-clique degrees.
    phase2_scale: float | None = None
    # Extra phase-3 selections against the previous K*; 0 keeps the single pass.
    refine_passes: int = 1

    def __post_init__(self) -> None:
        if not 0 < self.alpha < 1:
            raise ValueError("alpha must lie in (0, 1)")
        if self.beta <= 0:
            raise ValueError("beta must be positive")
        if not 0 < self.p < 1:
            raise ValueError("p must lie in (0, 1)")
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if self.refine_passes < 0:
            raise ValueError("refine_passes must be non-negative")

    def iterations_for(self, n: int) -> int:
        return self.t_max if self.t_max is not None else math.ceil(math.log(max(n, 2)))

    def rho(self, n: int) -> float:
        c = self.k / math.sqrt(n) if n else 0.0
        return survival_rate(self.alpha, self.beta, c, self.p)

    @property
    def core_scale(self) -> float:
        return self.phase2_scale if self.phase2_scale is not None else 0.5 * (1 - self.p)


@dataclass
class DekelTrace:
    rho: float
    sizes: list[int] = field(default_factory=list)
    clique_estimates: list[float] = field(default_factory=list)
    sample_sizes: list[int] = field(default_factory=list)
    mapping: VertexSet = ()
    stop_reason: str = ""

    @property
    def iterations(self) -> int:
        return len(self.sample_sizes)

    def record(self) -> dict:
        return {
            "rho": self.rho,
            "sizes": list(self.sizes),
            "clique_estimates": list(self.clique_estimates),
            "sample_sizes": list(self.sample_sizes),
            "stop_reason": self.stop_reason,
        }


def estimate_clique_size(trace: DekelTrace, cfg: DekelConfig) -> float:
    """Estimated hidden-clique vertices left after phase 1: ``k * rho^t``."""
    return cfg.k * trace.rho ** trace.iterations


def dekel_phase1_iterate(g_i: Graph, cfg: DekelConfig, r: RngState) -> tuple[Graph, VertexSet, int]:
    """One filtering round. Returns (surviving subgraph, survivor indices in ``g_i``, |S_i|)."""
    if g_i.n == 0:
        raise ValueError("phase 1 needs a non-empty graph")
    sample = np.flatnonzero(r.bernoulli_array(cfg.alpha, g_i.n))
    size = int(sample.size)
    if size == 0:
        return g_i, tuple(range(g_i.n)), 0
    counts = degrees_into(g_i, sample.tolist())
    threshold = cfg.p * size + cfg.beta * math.sqrt(cfg.p * (1 - cfg.p) * size)
    keep = counts >= threshold
    keep[sample] = False
    survivors = tuple(int(v) for v in np.flatnonzero(keep))
    sub, mapping = induced_subgraph(g_i, survivors)
    return sub, mapping, size


def dekel_phase2_extract(g_t: Graph, trace: DekelTrace, cfg: DekelConfig) -> VertexSet:
    """Vertices of ``g_t`` whose degree clears ``p|V(G_t)| + scale * k_t``, as original indices."""
    if g_t.n == 0:
        return ()
    k_t = estimate_clique_size(trace, cfg)
    threshold = cfg.p * g_t.n + cfg.core_scale * k_t
    chosen = np.flatnonzero(g_t.degrees() >= threshold)
    mapping = trace.mapping if trace.mapping else tuple(range(g_t.n))
    return tuple(sorted(mapping[int(v)] for v in chosen))


def _select_top(g: Graph, pool, k: int, level: float) -> np.ndarray:
    into_pool = degrees_into(g, list(pool))
    qualified = np.flatnonzero(into_pool >= level * k)
    if qualified.size > k:
        order = np.lexsort((qualified, -into_pool[qualified]))
        qualified = qualified[order[:k]]
    return np.sort(qualified)


def dekel_phase3_complete(g: Graph, k_bar: VertexSet, cfg: DekelConfig) -> VertexSet:
    """Grow the core ``k_bar`` to at most ``k`` vertices; fewer means undersized.

    With ``refine_passes`` > 0 the selection is repeated against the previous
    result, which evicts stray vertices admitted through a noisy pool.
    """
    if not k_bar:
        raise ValueError("phase 3 needs a non-empty core")
    level = 0.5 * (1 + cfg.p)
    into_core = degrees_into(g, k_bar)
    in_pool = into_core >= level * len(k_bar)
    in_pool[list(k_bar)] = True
    chosen = _select_top(g, np.flatnonzero(in_pool).tolist(), cfg.k, level)
    for _ in range(cfg.refine_passes):
        if chosen.size == 0:
            break
        again = _select_top(g, chosen.tolist(), cfg.k, level)
        if np.array_equal(again, chosen):
            break
        chosen = again
    return tuple(int(v) for v in chosen)


@dataclass(frozen=True)
class DekelOutcome:
    clique: VertexSet | None
    candidate: VertexSet
    trace: DekelTrace
    status: str  # "found", "undersized", "not-clique", "empty-core" or "budget"

    @property
    def found(self) -> bool:
        return self.clique is not None


def dekel_attack(g: Graph, cfg: DekelConfig, r: RngState | None = None, limits: Budget | None = None) -> DekelOutcome:
    r = r if r is not None else RngState(0)
    n = g.n
    rho = cfg.rho(n)
    trace = DekelTrace(rho=rho)
    current, mapping = g, tuple(range(n))
    t_max = cfg.iterations_for(n)
    trace.sizes.append(n)
    trace.clique_estimates.append(float(cfg.k))
    while True:
        estimate = cfg.k * rho ** trace.iterations
        if trace.iterations >= t_max:
            trace.stop_reason = "t_max"
            break
        if current.n <= max(cfg.min_survivors, 4 * estimate):
            trace.stop_reason = "small"
            break
        if limits is not None:
            try:
                limits.check()
            except BudgetExceeded:
                trace.mapping = mapping
                return DekelOutcome(None, (), trace, "budget")
        nxt, sub_map, sample_size = dekel_phase1_iterate(current, cfg, r.child(f"phase1/{trace.iterations}"))
        if nxt.n == 0:
            trace.stop_reason = "emptied"
            break
        current = nxt
        mapping = tuple(mapping[i] for i in sub_map)
        trace.sample_sizes.append(sample_size)
        trace.sizes.append(current.n)
        trace.clique_estimates.append(cfg.k * rho ** trace.iterations)
    trace.mapping = mapping
    core = dekel_phase2_extract(current, trace, cfg)
    if not core:
        return DekelOutcome(None, (), trace, "empty-core")
    result = dekel_phase3_complete(g, core, cfg)
    if len(result) < cfg.k:
        return DekelOutcome(None, result, trace, "undersized")
    if not is_clique(g, result):
        return DekelOutcome(None, result, trace, "not-clique")
    return DekelOutcome(result, result, trace, "found")


def boost_subset_size(c: float, p: float, target_c: float) -> int:
    """Smallest ``s`` with ``c * p^(-s/2) >= target_c``: common neighbourhoods of ``s`` clique vertices shrink by ``p^s``."""
    if c <= 0:
        raise ValueError("c must be positive")
    if c >= target_c:
        return 0
    return math.ceil(2 * math.log(target_c / c) / math.log(1 / p) - 1e-9)


def dekel_boosted_attack(
    g: Graph,
    cfg: DekelConfig,
    r: RngState | None = None,
    target_c: float = 3.0,
    budget: int | None = None,
    limits: Budget | None = None,
) -> DekelOutcome:
    """Plain attack first; on failure, rerun inside common neighbourhoods of ``s``-cliques."""
    from .enumeration import boost_with

    r = r if r is not None else RngState(0)
    plain = dekel_attack(g, cfg, r.child("plain"), limits)
    if plain.found or g.n == 0 or cfg.k < 1:
        return plain
    s = min(boost_subset_size(cfg.k / math.sqrt(g.n), cfg.p, target_c), cfg.k)
    if s == 0:
        return plain
    calls = 0

    def inner(sub: Graph, k_rest: int) -> VertexSet | None:
        nonlocal calls
        calls += 1
        out = dekel_attack(sub, replace(cfg, k=k_rest), r.child(f"boost/{calls}"))
        return out.clique

    scan = boost_with(g, cfg.k, s, inner, budget, limits)
    if scan.clique is None:
        status = "budget" if scan.status == "budget" else plain.status
        return DekelOutcome(None, plain.candidate, plain.trace, status)
    return DekelOutcome(scan.clique, scan.clique, plain.trace, "found")
