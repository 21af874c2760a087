"""Jerrum's Metropolis process on the cliques of a graph.

From state ``K`` a vertex ``v`` is drawn uniformly from all ``n`` vertices.
If ``v`` is outside ``K`` and adjacent to all of it, it is added; if ``v`` is
in ``K`` it is removed with probability ``1 / temperature``; otherwise the
state stays. The stationary law is proportional to ``temperature ** |K|``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._backend import kernels
from .budget import Budget, BudgetExceeded
from .graph import Graph, GraphInputError, VertexSet, bits_to_vertices, is_clique, vertex_set
from .rng import RngState

CHUNK = 1 << 16


@dataclass(frozen=True)
class MetropolisConfig:
    temperature: float = 2.0
    max_steps: int | None = None
    target_size: int | None = None
    initial_state: VertexSet = field(default=())

    def __post_init__(self) -> None:
        if self.temperature < 1:
            raise ValueError("temperature must be at least 1")
        if self.max_steps is not None and self.max_steps < 0:
            raise ValueError("max_steps must be non-negative")

    def steps_for(self, g: Graph) -> int:
        """Explicit ``max_steps``, else ``n^2 log n`` (at least ``n``)."""
        if self.max_steps is not None:
            return self.max_steps
        n = g.n
        return max(n, math.ceil(n * n * math.log(max(n, 2))))


@dataclass(frozen=True)
class MetropolisResult:
    best: VertexSet
    final: VertexSet
    steps: int
    reached_target: bool


def _check_state(g: Graph, state: VertexSet) -> VertexSet:
    state = vertex_set(state)
    if not is_clique(g, state):
        raise GraphInputError("Metropolis state must be a clique")
    return state


def apply_move(g: Graph, state: VertexSet, v: int, remove: bool) -> VertexSet:
    """The state after proposing vertex ``v``; ``remove`` is the outcome of the 1/temperature coin."""
    if v in state:
        return tuple(u for u in state if u != v) if remove else state
    bits = g.bitrows[v]
    if all((bits >> u) & 1 for u in state):
        return vertex_set((*state, v))
    return state


def metropolis_step(g: Graph, state: VertexSet, cfg: MetropolisConfig, r: RngState) -> VertexSet:
    state = _check_state(g, state)
    if g.n == 0:
        return state
    v = int(r.integers(g.n, 1)[0])
    remove = bool(r.uniforms(1)[0] < 1.0 / cfg.temperature)
    return apply_move(g, state, v, remove)


def transition_kernel(g: Graph, state: VertexSet, temperature: Fraction | int) -> dict[VertexSet, Fraction]:
    """Exact one-step transition law out of ``state``, built from :func:`apply_move`."""
    state = _check_state(g, state)
    temperature = Fraction(temperature)
    p_remove = 1 / temperature
    out: dict[VertexSet, Fraction] = {}
    for v in range(g.n):
        for remove, weight in ((True, p_remove), (False, 1 - p_remove)):
            if weight == 0:
                continue
            nxt = apply_move(g, state, v, remove)
            out[nxt] = out.get(nxt, Fraction(0)) + weight / g.n
    return out


def run_chain(
    g: Graph,
    cfg: MetropolisConfig,
    r: RngState,
    limits: Budget | None = None,
    trace: bool = False,
) -> tuple[MetropolisResult, np.ndarray | None]:
    """Iterate the process in chunks; ``trace`` records the low word of each state (n <= 64)."""
    state = _check_state(g, cfg.initial_state)
    total = cfg.steps_for(g)
    target = cfg.target_size if cfg.target_size is not None else g.n + 1
    if trace and g.n > 64:
        raise ValueError("state tracing is limited to n <= 64")
    traces = []
    best = state
    done = 0
    inv_temp = 1.0 / cfg.temperature
    reached = len(state) >= target
    while done < total and not reached and g.n > 0:
        size = min(CHUNK, total - done)
        vs = r.integers(g.n, size)
        us = r.uniforms(size)
        buf = np.zeros(size, dtype=np.uint64) if trace else None
        state, best, steps = kernels.metropolis_run(g, state, best, vs, us, inv_temp, target, buf)
        if trace:
            traces.append(buf[:steps])
        done += steps
        reached = len(state) >= target
        if limits is not None:
            try:
                limits.charge(steps)
            except BudgetExceeded:
                break
    result = MetropolisResult(best, state, done, reached)
    return result, (np.concatenate(traces) if trace and traces else (np.zeros(0, np.uint64) if trace else None))


def metropolis_attack(g: Graph, cfg: MetropolisConfig = MetropolisConfig(), r: RngState | None = None, limits: Budget | None = None) -> VertexSet:
    """Largest clique state visited within the step budget."""
    r = r if r is not None else RngState(0)
    return run_chain(g, cfg, r, limits)[0].best


def enumerate_cliques(g: Graph) -> list[VertexSet]:
    """Every clique of ``g`` including the empty one (small graphs only)."""
    adj = g.bitrows
    out: list[VertexSet] = [()]

    def grow(prefix: tuple[int, ...], cands: int) -> None:
        for v in bits_to_vertices(cands):
            nxt = (*prefix, v)
            out.append(nxt)
            grow(nxt, cands & adj[v] & ~((1 << (v + 1)) - 1))

    grow((), (1 << g.n) - 1)
    return out
