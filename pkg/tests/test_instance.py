import math

import numpy as np
import pytest

from plantedclique.graph import GraphInputError, is_clique
from plantedclique.instance import (
    PlantParams,
    load_instance,
    natural_clique_size_experiment,
    owf_evaluate,
    plant_clique,
    sample_gnp,
    save_instance,
)
from plantedclique.rng import RngState


def test_params_validation():
    with pytest.raises(ValueError):
        PlantParams(10, 0.5, 11)
    with pytest.raises(ValueError):
        PlantParams(10, 1.5, 1)
    with pytest.raises(ValueError):
        PlantParams(-1, 0.5, 0)


def test_epsilon_and_label():
    pp = PlantParams(1024, 0.5, 15)
    assert math.isclose(pp.epsilon, 0.5)
    assert pp.label == "standard"
    assert PlantParams(1024, 0.5, 25).label == "nonstandard"
    assert PlantParams(10, 1.0, 3).epsilon is None


def test_gnp_extremes():
    assert sample_gnp(30, 0.0, RngState(0)).edge_count == 0
    assert sample_gnp(30, 1.0, RngState(0)).edge_count == 30 * 29 // 2
    assert sample_gnp(0, 0.5, RngState(0)).n == 0


def test_gnp_edge_count_within_binomial_bound():
    n, p = 300, 0.3
    m = sample_gnp(n, p, RngState(4)).edge_count
    pairs = n * (n - 1) / 2
    assert abs(m - p * pairs) < 5 * math.sqrt(pairs * p * (1 - p))


def test_owf_plants_a_clique_and_only_adds_edges():
    pp = PlantParams(120, 0.5, 14)
    inst = owf_evaluate(pp, RngState(8))
    base = sample_gnp(120, 0.5, RngState(8).child("graph"))
    assert len(inst.hidden_clique) == 14 and is_clique(inst.public_graph, inst.hidden_clique)
    assert inst.public_graph == plant_clique(base, inst.hidden_clique)
    extra = np.argwhere(inst.public_graph.dense() & ~base.dense())
    hidden = set(inst.hidden_clique)
    assert all(u in hidden and v in hidden for u, v in extra)


def test_owf_is_deterministic():
    pp = PlantParams(80, 0.5, 10)
    a, b = owf_evaluate(pp, RngState(1)), owf_evaluate(pp, RngState(1))
    assert a.public_graph == b.public_graph and a.hidden_clique == b.hidden_clique


def test_k_zero_is_plain_gnp():
    inst = owf_evaluate(PlantParams(50, 0.5, 0), RngState(3))
    assert inst.hidden_clique == ()
    assert inst.public_graph == sample_gnp(50, 0.5, RngState(3).child("graph"))


def test_instance_file_roundtrip(tmp_path):
    inst = owf_evaluate(PlantParams(60, 0.4, 8), RngState(12))
    path = tmp_path / "a.inst"
    save_instance(inst, path)
    back = load_instance(path)
    assert back.public_graph == inst.public_graph
    assert back.hidden_clique == inst.hidden_clique
    assert back.params == inst.params and back.seed == inst.seed


def test_instance_file_rejects_inconsistent_clique(tmp_path):
    inst = owf_evaluate(PlantParams(30, 0.0, 4), RngState(1))
    path = tmp_path / "bad.inst"
    save_instance(inst, path)
    text = path.read_text().splitlines()
    text[-1] = "1 2 3 30"
    path.write_text("\n".join(text) + "\n")
    with pytest.raises(GraphInputError):
        load_instance(path)


def test_instance_file_missing_section(tmp_path):
    path = tmp_path / "x.inst"
    path.write_text("[metadata]\n{}\n")
    with pytest.raises(GraphInputError):
        load_instance(path)


def test_natural_clique_sizes_small():
    summary = natural_clique_size_experiment(40, 0.5, 5, RngState(0))
    assert len(summary.sizes) == 5 and 4 <= summary.min <= summary.max <= 10
