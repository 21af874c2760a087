"""Clique extension by t-subsets with poor-subgraph certificates.

A phase keeps a working vertex set ``V`` and a clique ``C`` whose members
are adjacent to all of ``V``. Each iteration splits ``V`` into parts of
``2*d*t`` vertices and looks for a t-clique ``S`` inside some part with at
least ``|V|/(2d) - t`` common neighbours in ``V``. Found: ``C += S`` and
``V`` shrinks to those neighbours. Not found in any part: ``V`` provably has
no clique of size ``|V|/(2d)`` and is removed from the graph as "poor".
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .budget import Budget, BudgetExceeded
from .graph import Graph, VertexSet, bits_to_vertices, common_neighbor_bits, induced_subgraph, vertices_to_bits


@dataclass(frozen=True)
class FeigeConfig:
    density_ratio: float
    t: int = 2
    # On "done", add an exact maximum clique of the (small) final working set.
    finish_exact: bool = False

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError("t must be at least 1")
        if self.density_ratio < 1:
            raise ValueError("density_ratio must be at least 1")

    @property
    def part_size(self) -> int:
        return math.ceil(2 * self.density_ratio * self.t)

    @property
    def min_v(self) -> float:
        return 6 * self.density_ratio * self.t

    @property
    def subsets_per_part(self) -> int:
        return math.comb(self.part_size, self.t)

    @staticmethod
    def asymptotic_t(n: int) -> int:
        """``ceil(log n / log log n)``; 1 for graphs too small for the formula."""
        if n < 16:
            return 1
        return max(1, math.ceil(math.log(n) / math.log(math.log(n))))


def size_bound(n: int, cfg: FeigeConfig) -> float:
    """Guaranteed size ``t * log_{3d}(n / t) - 3`` of the returned clique."""
    return cfg.t * math.log(n / cfg.t) / math.log(3 * cfg.density_ratio) - 3


def alternative_bounds(n: int, cfg: FeigeConfig) -> dict[str, float]:
    """Other printed forms of the size guarantee, for reporting only."""
    d, t = cfg.density_ratio, cfg.t
    base = math.log(3 * d)

    def safe(x: float) -> float:
        return t * math.log(x) / base if x > 0 else float("-inf")

    return {
        "minus-three": size_bound(n, cfg),
        "over-12d2t": safe(n / (12 * d * d * t)),
        "over-6dt": safe(n / (6 * d * t)),
    }


def is_poor_certificate(g_sub: Graph, density_ratio: float) -> bool:
    """Exact check that ``g_sub`` has no clique of size ``|V|/(2d)``. Small graphs only."""
    from .oracle import max_clique_exact

    return len(max_clique_exact(g_sub)) < g_sub.n / (2 * density_ratio)


@dataclass(frozen=True)
class FeigeStep:
    kind: str  # "extended", "poor" or "done"
    vertices: VertexSet
    c_acc: VertexSet
    examined: int
    per_part: tuple[int, ...] = ()


def feige_iteration(g: Graph, vertices: VertexSet, c_acc: VertexSet, cfg: FeigeConfig) -> FeigeStep:
    """One iteration on the working set ``vertices`` (labels of ``g``).

    ``extended`` carries the shrunken working set and grown clique; ``poor``
    carries the certified set; ``done`` means the working set is too small.
    """
    size = len(vertices)
    if size < cfg.min_v:
        return FeigeStep("done", vertices, c_acc, 0)
    adj = g.bitrows
    vmask = vertices_to_bits(vertices)
    need = size / (2 * cfg.density_ratio) - cfg.t
    examined = 0
    per_part = []
    for start in range(0, size, cfg.part_size):
        part = vertices[start : start + cfg.part_size]
        seen = 0
        for subset in itertools.combinations(part, cfg.t):
            seen += 1
            if any(not adj[a] >> b & 1 for a, b in itertools.combinations(subset, 2)):
                continue
            nbrs = common_neighbor_bits(g, subset) & vmask
            if nbrs.bit_count() >= need:
                per_part.append(seen)
                examined += seen
                grown = tuple(sorted((*c_acc, *subset)))
                return FeigeStep("extended", bits_to_vertices(nbrs), grown, examined, tuple(per_part))
        per_part.append(seen)
        examined += seen
    return FeigeStep("poor", vertices, c_acc, examined, tuple(per_part))


@dataclass
class FeigeOutcome:
    clique: VertexSet
    certificates: list[VertexSet] = field(default_factory=list)
    phases: int = 0
    iterations: int = 0
    examined: int = 0
    status: str = "done"  # "done" or "budget"


def feige_attack(g: Graph, cfg: FeigeConfig, limits: Budget | None = None) -> FeigeOutcome:
    """Run phases until one ends with a small working set; poor sets are removed in between."""
    remaining = tuple(range(g.n))
    out = FeigeOutcome(())
    c_acc: VertexSet = ()
    try:
        while True:
            out.phases += 1
            vertices, c_acc = remaining, ()
            while True:
                if limits is not None:
                    limits.check()
                step = feige_iteration(g, vertices, c_acc, cfg)
                out.iterations += 1
                out.examined += step.examined
                if limits is not None:
                    limits.charge(step.examined)
                if step.kind == "done":
                    out.clique = _finish(g, step, cfg)
                    return out
                if step.kind == "poor":
                    out.certificates.append(step.vertices)
                    drop = set(step.vertices)
                    remaining = tuple(v for v in remaining if v not in drop)
                    break
                vertices, c_acc = step.vertices, step.c_acc
    except BudgetExceeded:
        out.clique, out.status = c_acc, "budget"
        return out


def _finish(g: Graph, step: FeigeStep, cfg: FeigeConfig) -> VertexSet:
    if not cfg.finish_exact or not step.vertices:
        return step.c_acc
    from .oracle import max_clique_exact

    sub, mapping = induced_subgraph(g, step.vertices)
    return tuple(sorted((*step.c_acc, *(mapping[i] for i in max_clique_exact(sub)))))


def certificate_graph(g: Graph, certificate: VertexSet) -> Graph:
    return induced_subgraph(g, certificate)[0]
