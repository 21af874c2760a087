import pytest

from plantedclique.graph import Graph, GraphInputError, is_clique
from plantedclique.greedy import GreedyConfig, greedy_attack, greedy_once
from plantedclique.rng import RngState

from conftest import gnp


def test_complete_graph_gives_everything():
    assert greedy_attack(Graph.complete(8), r=RngState(0)) == tuple(range(8))


def test_edgeless_graph_gives_single_vertex():
    assert len(greedy_attack(Graph.empty(5), r=RngState(0))) == 1


def test_empty_graph_is_an_error():
    with pytest.raises(GraphInputError):
        greedy_attack(Graph.empty(0))


def test_restarts_never_hurt():
    g = gnp(200, 0.5, 2)
    one = greedy_attack(g, GreedyConfig(1), RngState(4))
    many = greedy_attack(g, GreedyConfig(20), RngState(4))
    assert len(many) >= len(one) and is_clique(g, many)


def test_restart_zero_is_rejected():
    with pytest.raises(ValueError):
        GreedyConfig(0)


def test_start_vertex_is_uniform():
    # first chosen vertex is floor(u * n); over many seeds every vertex shows up
    g = Graph.empty(6)
    seen = {greedy_once(g, RngState(s))[0] for s in range(300)}
    assert seen == set(range(6))
