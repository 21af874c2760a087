"""Lexicographic scan over s-cliques, shared by the boosted attacks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .budget import Budget, BudgetExceeded
from .graph import Graph, VertexSet, bits_to_vertices, common_neighbor_bits, induced_subgraph, is_clique


@dataclass(frozen=True)
class ScanOutcome:
    clique: VertexSet | None
    examined: int
    status: str  # "found", "none" or "budget"


class _Found(Exception):
    def __init__(self, clique: VertexSet):
        self.clique = clique


def scan_subset_cliques(
    g: Graph,
    s: int,
    visit: Callable[[VertexSet], VertexSet | None],
    budget: int | None = None,
    limits: Budget | None = None,
) -> ScanOutcome:
    """Call ``visit`` on each ``s``-clique of ``g`` in lexicographic order until it returns a set.

    Non-clique prefixes are pruned, so ``examined`` counts only cliques.
    ``budget`` caps ``examined``; ``limits`` is charged once per visit.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    adj = g.bitrows
    examined = 0
    prefix: list[int] = []

    def visit_one() -> None:
        nonlocal examined
        if budget is not None and examined >= budget:
            raise BudgetExceeded("step", examined)
        examined += 1
        if limits is not None:
            limits.charge()
        found = visit(tuple(prefix))
        if found is not None:
            raise _Found(found)

    def extend(cands: int) -> None:
        need = s - len(prefix)
        rest = cands
        for v in bits_to_vertices(cands):
            if rest.bit_count() < need:
                return
            rest &= ~(1 << v)
            prefix.append(v)
            if need == 1:
                visit_one()
            else:
                extend(rest & adj[v])
            prefix.pop()

    try:
        if s == 0:
            visit_one()
        elif g.n:
            extend((1 << g.n) - 1)
    except _Found as hit:
        return ScanOutcome(hit.clique, examined, "found")
    except BudgetExceeded:
        return ScanOutcome(None, examined, "budget")
    return ScanOutcome(None, examined, "none")


def boost_with(
    g: Graph,
    k: int,
    s: int,
    inner: Callable[[Graph, int], VertexSet | None],
    budget: int | None = None,
    limits: Budget | None = None,
) -> ScanOutcome:
    """For each ``s``-clique ``S``, run ``inner`` for ``k - s`` on ``S`` plus its common neighbourhood.

    Succeeds on the first ``S`` whose combined set is a clique of size at least ``k``.
    """
    if not 0 <= s <= k:
        raise ValueError("need 0 <= s <= k")

    def visit(subset: VertexSet) -> VertexSet | None:
        nbrs = common_neighbor_bits(g, subset)
        if nbrs.bit_count() < k - s:
            return None
        if k == s:
            q_s: VertexSet = ()
        else:
            sub, mapping = induced_subgraph(g, (*subset, *bits_to_vertices(nbrs)))
            inner_set = inner(sub, k - s)
            if not inner_set:
                return None
            q_s = tuple(mapping[i] for i in inner_set)
        cand = tuple(sorted(set(q_s) | set(subset)))
        if len(cand) >= k and is_clique(g, cand):
            return cand
        return None

    return scan_subset_cliques(g, s, visit, budget, limits)
