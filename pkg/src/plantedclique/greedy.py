"""Karp's randomized greedy clique search."""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import kernels
from .graph import Graph, GraphInputError, VertexSet
from .rng import RngState


@dataclass(frozen=True)
class GreedyConfig:
    restarts: int = 1

    def __post_init__(self) -> None:
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")


def greedy_once(g: Graph, r: RngState) -> VertexSet:
    """Start at a uniform vertex, then keep adding a uniform common neighbour until none is left."""
    return kernels.greedy_run(g, r.uniforms(g.n + 1))


def greedy_attack(g: Graph, cfg: GreedyConfig = GreedyConfig(), r: RngState | None = None) -> VertexSet:
    """Largest maximal clique over ``cfg.restarts`` independent greedy runs (earliest wins ties)."""
    if g.n == 0:
        raise GraphInputError("greedy search needs at least one vertex")
    r = r if r is not None else RngState(0)
    best: VertexSet = ()
    for i in range(cfg.restarts):
        found = greedy_once(g, r.child(f"restart/{i}"))
        if len(found) > len(best):
            best = found
    return best
