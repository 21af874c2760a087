"""Exact maximum clique and the brute-force k-subset adversary."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels
from .budget import Budget, BudgetExceeded
from .graph import Graph, VertexSet, bits_to_vertices


def max_clique_exact(g: Graph) -> VertexSet:
    """A maximum clique; among ties, the lexicographically smallest sorted tuple."""
    return kernels.max_clique(g)[0]


def max_clique_with_stats(g: Graph) -> tuple[VertexSet, int]:
    return kernels.max_clique(g)


@dataclass(frozen=True)
class BruteForceOutcome:
    clique: VertexSet | None
    examined: int
    status: str  # "found", "none" (search complete) or "budget"

    @property
    def found(self) -> bool:
        return self.clique is not None


def brute_force_attack(g: Graph, k: int, budget: int | None = None, limits: Budget | None = None) -> BruteForceOutcome:
    """First ``k``-clique in lexicographic order of sorted ``k``-subsets.

    Prefixes that are not cliques, or that cannot be completed to size ``k``,
    are skipped; no ``k``-clique is skipped, so the result equals a plain
    lexicographic scan. ``examined`` counts prefix extensions tried and is
    compared against ``budget``.
    """
    if k < 0 or k > g.n:
        raise ValueError(f"k must satisfy 0 <= k <= n, got k={k}, n={g.n}")
    if k == 0:
        return BruteForceOutcome((), 0, "found")
    adj = g.bitrows
    examined = 0
    prefix: list[int] = []

    class _Found(Exception):
        pass

    def extend(cands: int) -> None:
        nonlocal examined
        need = k - len(prefix)
        rest = cands
        for v in bits_to_vertices(cands):
            if rest.bit_count() < need:
                return
            rest &= ~(1 << v)
            if budget is not None and examined >= budget:
                raise BudgetExceeded("step", examined)
            examined += 1
            if limits is not None:
                limits.charge()
            prefix.append(v)
            if need == 1:
                raise _Found
            extend(rest & adj[v])
            prefix.pop()

    try:
        extend((1 << g.n) - 1)
    except _Found:
        return BruteForceOutcome(tuple(prefix), examined, "found")
    except BudgetExceeded:
        return BruteForceOutcome(None, examined, "budget")
    return BruteForceOutcome(None, examined, "none")


def count_steps_estimate(n: int, p: float, k: int) -> int:
    """Brute-force work estimate: the number of ``k``-subsets of ``n`` vertices."""
    del p  # the subset count does not depend on edge density
    return math.comb(n, k)
