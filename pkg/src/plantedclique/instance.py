"""Random graphs and the planted-clique one-way function.

An instance file is a single text file with three labelled sections::

    [metadata]
    {"format-version": 1, "n": ..., "p": ..., "k": ..., "epsilon": ..., "seed": ...}
    [graph]
    p edge <n> <m>
    e <u> <v>            (1-based, DIMACS)
    [hidden-clique]
    <v1> <v2> ...        (1-based; empty line when k = 0)
"""

from __future__ import annotations

import json
import math
import statistics
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .graph import Graph, GraphInputError, VertexSet, add_clique, is_clique, pack_rows, read_dimacs, write_dimacs
from .rng import RngState

FORMAT_VERSION = 1


@dataclass(frozen=True)
class PlantParams:
    n: int
    p: float
    k: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"k must satisfy 0 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def log_inv_p_n(self) -> float | None:
        """``log_{1/p} n``, or None where undefined."""
        if not 0.0 < self.p < 1.0 or self.n <= 1:
            return None
        return math.log(self.n) / math.log(1.0 / self.p)

    @property
    def epsilon(self) -> float | None:
        base = self.log_inv_p_n
        return None if base is None else self.k / base - 1.0

    @property
    def in_hard_range(self) -> bool:
        base = self.log_inv_p_n
        return base is not None and base <= self.k <= 2 * base

    @property
    def label(self) -> str:
        return "standard" if self.in_hard_range else "nonstandard"


@dataclass(frozen=True)
class PlantedInstance:
    public_graph: Graph
    hidden_clique: VertexSet
    params: PlantParams
    seed: int


def sample_gnp(n: int, p: float, r: RngState) -> Graph:
    """Erdős–Rényi G(n, p). Pairs are drawn in row-major upper-triangle order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    dense = np.zeros((n, n), dtype=bool)
    for i in range(n - 1):
        dense[i, i + 1 :] = r.bernoulli_array(p, n - i - 1)
    dense |= dense.T
    return Graph(n, pack_rows(dense))


def plant_clique(g: Graph, k_set: VertexSet) -> Graph:
    return add_clique(g, k_set)


def owf_evaluate(params: PlantParams, r: RngState) -> PlantedInstance:
    """Sample G ~ G(n, p), pick a uniform k-subset K and join it into a clique."""
    g = sample_gnp(params.n, params.p, r.child("graph"))
    hidden = r.child("clique").sample_subset(params.n, params.k)
    return PlantedInstance(plant_clique(g, hidden), hidden, params, r.seed)


@dataclass(frozen=True)
class CliqueSizeSummary:
    sizes: tuple[int, ...]

    @property
    def mean(self) -> float:
        return statistics.fmean(self.sizes)

    @property
    def min(self) -> int:
        return min(self.sizes)

    @property
    def max(self) -> int:
        return max(self.sizes)


def natural_clique_size_experiment(n: int, p: float, trials: int, r: RngState) -> CliqueSizeSummary:
    from .oracle import max_clique_exact

    if trials < 1:
        raise ValueError("trials must be at least 1")
    sizes = tuple(len(max_clique_exact(sample_gnp(n, p, r.child(f"trial/{t}")))) for t in range(trials))
    return CliqueSizeSummary(sizes)


# -- instance files -----------------------------------------------------------

def instance_metadata(inst: PlantedInstance) -> dict:
    return {
        "format-version": FORMAT_VERSION,
        "n": inst.params.n,
        "p": inst.params.p,
        "k": inst.params.k,
        "epsilon": inst.params.epsilon,
        "seed": inst.seed,
    }


def save_instance(inst: PlantedInstance, path: str | Path) -> None:
    with open(path, "w") as fh:
        fh.write("[metadata]\n")
        fh.write(json.dumps(instance_metadata(inst), sort_keys=True) + "\n")
        fh.write("[graph]\n")
        write_dimacs(inst.public_graph, fh)
        fh.write("[hidden-clique]\n")
        fh.write(" ".join(str(v + 1) for v in inst.hidden_clique) + "\n")


def load_instance(path: str | Path) -> PlantedInstance:
    sections: dict[str, list[str]] = {}
    current = None
    with open(path) as fh:
        for line in fh:
            stripped = line.strip()
            if stripped.startswith("[") and stripped.endswith("]"):
                current = stripped[1:-1]
                sections[current] = []
            elif current is not None:
                sections[current].append(line)
    missing = {"metadata", "graph", "hidden-clique"} - sections.keys()
    if missing:
        raise GraphInputError(f"instance file lacks section(s): {', '.join(sorted(missing))}")
    meta_text = "".join(sections["metadata"]).strip()
    meta = json.loads(meta_text)
    if meta.get("format-version") != FORMAT_VERSION:
        raise GraphInputError(f"unsupported instance format version {meta.get('format-version')!r}")
    params = PlantParams(int(meta["n"]), float(meta["p"]), int(meta["k"]))
    graph = read_dimacs(sections["graph"])
    if graph.n != params.n:
        raise GraphInputError("graph block disagrees with metadata n")
    hidden = tuple(sorted(int(tok) - 1 for line in sections["hidden-clique"] for tok in line.split()))
    if len(hidden) != params.k or not is_clique(graph, hidden):
        raise GraphInputError("hidden clique is inconsistent with the graph or k")
    return PlantedInstance(graph, hidden, params, int(meta["seed"]))
