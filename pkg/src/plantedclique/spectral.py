"""Second-eigenvector recovery of large planted cliques (p = 1/2).

The base attack sorts vertices by the second eigenvector of the 0/1
adjacency matrix, keeps the top ``k`` as ``W`` and returns every vertex with
at least ``ceil(3k/4)`` neighbours in ``W``. The boosted attack handles
smaller ``c = k / sqrt(n)`` by enumerating ``s``-subsets ``S`` and rerunning
the base attack inside the common neighbourhood of ``S``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .budget import Budget, BudgetExceeded
from .enumeration import boost_with
from .graph import Graph, VertexSet, degrees_into, is_clique
from .rng import RngState

_START_SEED = 0x5EED_0002


class EigenConvergenceError(RuntimeError):
    def __init__(self, iterations: int, residuals: tuple[float, ...]):
        super().__init__(f"eigensolver did not converge in {iterations} iterations (residuals {residuals})")
        self.iterations = iterations
        self.residuals = residuals


@dataclass(frozen=True)
class SpectralConfig:
    k: int
    c_boost: bool = True
    eig_tol: float = 1e-8
    eig_max_iters: int | None = None
    orientations: tuple[str, ...] = ("abs", "pos", "neg")

    def __post_init__(self) -> None:
        if self.eig_tol <= 0:
            raise ValueError("eig_tol must be positive")
        bad = set(self.orientations) - {"abs", "pos", "neg"}
        if bad or not self.orientations:
            raise ValueError(f"orientations must be drawn from abs/pos/neg, got {self.orientations}")

    def max_iters_for(self, n: int) -> int:
        return self.eig_max_iters if self.eig_max_iters is not None else 10 * n + 1000


@dataclass(frozen=True)
class EigenPair:
    value: float
    vector: np.ndarray
    residual: float


def top_two_eigenpairs(g: Graph, cfg: SpectralConfig, limits: Budget | None = None) -> tuple[EigenPair, EigenPair]:
    """The two algebraically largest eigenpairs of the adjacency matrix.

    Block Lanczos (block size 2, so a repeated top eigenvalue is still
    resolved) with full reorthogonalisation: a Krylov basis grown from two
    fixed start vectors, with Rayleigh-Ritz on the projected matrix after
    every matrix-vector product. Stops once both Ritz residuals satisfy
    ``||A x - t x|| <= eig_tol``, which implies the relative bound
    ``eig_tol * max(1, |t|)``.
    """
    n = g.n
    if n < 2:
        raise ValueError("need at least two vertices")
    a = g.dense().astype(np.float64)
    max_iters = cfg.max_iters_for(n)
    gen = RngState(_START_SEED).gen
    basis = np.zeros((n, min(n, max_iters + 1)))
    images = np.zeros_like(basis)
    scale = 1.0

    def orthogonal(w: np.ndarray, m: int) -> tuple[np.ndarray, float]:
        for _ in range(2):
            w = w - basis[:, :m] @ (basis[:, :m].T @ w)
        return w, float(np.linalg.norm(w))

    m = 0
    residuals: tuple[float, ...] = ()
    while m < basis.shape[1]:
        if limits is not None:
            limits.charge()
        # the first two directions are random; later ones extend the block Krylov space
        w = gen.standard_normal(n) if m < 2 else images[:, m - 2].copy()
        w, norm = orthogonal(w, m)
        while norm <= 1e-10 * scale:
            # invariant subspace found; continue from a fresh direction
            w, norm = orthogonal(gen.standard_normal(n), m)
        basis[:, m] = w / norm
        images[:, m] = a @ basis[:, m]
        scale = max(scale, float(np.abs(images[:, m]).max()))
        m += 1
        if m < 2:
            continue
        proj = basis[:, :m].T @ images[:, :m]
        proj = (proj + proj.T) / 2
        theta, s = np.linalg.eigh(proj)
        top = s[:, [-1, -2]]
        vals = theta[[-1, -2]]
        vecs = basis[:, :m] @ top
        res = images[:, :m] @ top - vecs * vals
        residuals = tuple(float(np.linalg.norm(res[:, j])) for j in range(2))
        if max(residuals) <= cfg.eig_tol:
            pairs = []
            for j in range(2):
                vec = vecs[:, j] / np.linalg.norm(vecs[:, j])
                pivot = int(np.argmax(np.abs(vec)))
                if vec[pivot] < 0:
                    vec = -vec
                pairs.append(EigenPair(float(vals[j]), vec, residuals[j]))
            return pairs[0], pairs[1]
        if m >= max_iters:
            break
    raise EigenConvergenceError(m, residuals)


@dataclass(frozen=True)
class SpectralRun:
    clique: VertexSet
    pairs: tuple[EigenPair, EigenPair]
    orientation: str
    valid: bool


def _threshold_set(g: Graph, w: np.ndarray, k: int) -> VertexSet:
    counts = degrees_into(g, w.tolist())
    return tuple(int(v) for v in np.flatnonzero(counts >= math.ceil(3 * k / 4)))


def spectral_base_run(g: Graph, cfg: SpectralConfig, limits: Budget | None = None) -> SpectralRun:
    """Base attack with diagnostics.

    Orientations are tried in ``cfg.orientations`` order: ``abs`` ranks by
    ``|v2|``, ``pos``/``neg`` by the signed entries. The first orientation
    whose set is a clique of size at least ``k`` wins; otherwise the first
    orientation's set is returned.
    """
    k = cfg.k
    pairs = top_two_eigenpairs(g, cfg, limits)
    if k <= 0:
        return SpectralRun((), pairs, cfg.orientations[0], True)
    v2 = pairs[1].vector
    keys = {"abs": np.abs(v2), "pos": v2, "neg": -v2}
    first: SpectralRun | None = None
    for name in cfg.orientations:
        w = np.argsort(-keys[name], kind="stable")[:k]
        q = _threshold_set(g, w, k)
        valid = len(q) >= k and is_clique(g, q)
        run = SpectralRun(q, pairs, name, valid)
        if valid:
            return run
        if first is None:
            first = run
    assert first is not None
    return first


def spectral_base_attack(g: Graph, cfg: SpectralConfig) -> VertexSet:
    return spectral_base_run(g, cfg).clique


def derive_subset_size(c: float) -> int:
    """``ceil(2 log2(10 / c) + 2)``, floored at zero for very large ``c``."""
    if c <= 0:
        raise ValueError(f"c must be positive, got {c}")
    return max(0, math.ceil(2 * math.log2(10 / c) + 2 - 1e-9))


@dataclass(frozen=True)
class BoostedOutcome:
    clique: VertexSet | None
    examined: int
    status: str  # "fast-path", "found", "none" or "budget"
    subset_size: int

    @property
    def found(self) -> bool:
        return self.clique is not None


def spectral_boosted_attack(g: Graph, cfg: SpectralConfig, budget: int | None = None, limits: Budget | None = None) -> BoostedOutcome:
    """Base attack on the whole graph, then subset enumeration if that fails.

    ``s``-subsets are scanned in lexicographic order. Only subsets that are
    cliques with at least ``k - s`` common neighbours can succeed, so others
    are skipped during the scan. ``examined`` counts complete subsets
    evaluated and is compared against ``budget``.
    """
    k = cfg.k
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.n
    s = min(derive_subset_size(k / math.sqrt(n)), k) if n else 0
    if n >= 2:
        try:
            run = spectral_base_run(g, cfg, limits)
        except BudgetExceeded:
            return BoostedOutcome(None, 0, "budget", s)
        if run.valid:
            return BoostedOutcome(run.clique, 0, "fast-path", s)
    if not cfg.c_boost or n < k:
        return BoostedOutcome(None, 0, "none", s)

    def inner(sub: Graph, k_rest: int) -> VertexSet | None:
        if sub.n < 2:
            return None
        return spectral_base_attack(sub, replace(cfg, k=k_rest, c_boost=False))

    scan = boost_with(g, k, s, inner, budget, limits)
    return BoostedOutcome(scan.clique, scan.examined, scan.status, s)
