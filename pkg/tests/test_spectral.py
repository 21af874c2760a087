import math

import numpy as np
import pytest

from plantedclique.graph import Graph, is_clique
from plantedclique.instance import PlantParams, owf_evaluate
from plantedclique.rng import RngState
from plantedclique.spectral import (
    EigenConvergenceError,
    SpectralConfig,
    derive_subset_size,
    spectral_base_attack,
    spectral_base_run,
    spectral_boosted_attack,
    top_two_eigenpairs,
)

from conftest import gnp


@pytest.mark.parametrize("seed", range(3))
def test_eigenvalues_match_dense_reference(seed):
    g = gnp(64, 0.5, seed)
    pairs = top_two_eigenpairs(g, SpectralConfig(k=1))
    ref = np.linalg.eigvalsh(g.dense().astype(float))[::-1][:2]
    assert abs(pairs[0].value - ref[0]) < 1e-6 and abs(pairs[1].value - ref[1]) < 1e-6
    a = g.dense().astype(float)
    for pair in pairs:
        assert np.linalg.norm(a @ pair.vector - pair.value * pair.vector) <= 1e-8
        assert math.isclose(np.linalg.norm(pair.vector), 1.0)


def test_eigensolver_handles_disconnected_graph():
    # two disjoint triangles: top eigenvalue 2 is doubly degenerate
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    a, b = top_two_eigenpairs(g, SpectralConfig(k=1))
    assert math.isclose(a.value, 2.0) and math.isclose(b.value, 2.0)


def test_eigensolver_iteration_cap():
    with pytest.raises(EigenConvergenceError):
        top_two_eigenpairs(gnp(100, 0.5, 0), SpectralConfig(k=1, eig_max_iters=3))


def test_subset_size_formula():
    assert derive_subset_size(10) == 2
    assert derive_subset_size(2.5) == 6
    assert derive_subset_size(1000) == 0
    with pytest.raises(ValueError):
        derive_subset_size(0)


def test_base_recovers_large_clique():
    inst = owf_evaluate(PlantParams(900, 0.5, 300), RngState(1))
    run = spectral_base_run(inst.public_graph, SpectralConfig(k=300))
    assert run.valid and run.clique == inst.hidden_clique


def test_absolute_ranking_fails_at_half_density():
    # with k = n/2 the clique side of v2 has the smaller entries
    inst = owf_evaluate(PlantParams(400, 0.5, 200), RngState(0))
    literal = spectral_base_run(inst.public_graph, SpectralConfig(k=200, orientations=("abs",)))
    assert not literal.valid
    full = spectral_base_run(inst.public_graph, SpectralConfig(k=200))
    assert full.valid and full.orientation != "abs" and full.clique == inst.hidden_clique


def test_boosted_recovers_through_subsets():
    inst = owf_evaluate(PlantParams(200, 0.5, 15), RngState(2))
    out = spectral_boosted_attack(inst.public_graph, SpectralConfig(k=15), budget=100_000)
    assert out.status in ("found", "fast-path") and is_clique(inst.public_graph, out.clique) and len(out.clique) >= 15


def test_boosted_respects_budget():
    g = gnp(120, 0.5, 3)
    out = spectral_boosted_attack(g, SpectralConfig(k=30), budget=5)
    assert out.status == "budget" and out.examined == 5


def test_no_boost_reports_none():
    out = spectral_boosted_attack(gnp(60, 0.5, 1), SpectralConfig(k=30, c_boost=False))
    assert out.clique is None and out.status == "none"


def test_base_attack_k_zero():
    assert spectral_base_attack(gnp(10, 0.5, 0), SpectralConfig(k=0)) == ()


def test_config_validation():
    with pytest.raises(ValueError):
        SpectralConfig(k=3, orientations=("up",))
    with pytest.raises(ValueError):
        SpectralConfig(k=3, eig_tol=0)
