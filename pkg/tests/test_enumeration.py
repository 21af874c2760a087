import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from plantedclique.enumeration import boost_with, scan_subset_cliques
from plantedclique.graph import Graph, is_clique

from conftest import graphs


@given(graphs(max_n=9), st.integers(0, 4))
@settings(max_examples=60, deadline=None)
def test_scan_visits_every_s_clique_in_order(g, s):
    seen = []
    out = scan_subset_cliques(g, s, lambda sub: seen.append(sub))
    expect = [c for c in itertools.combinations(range(g.n), s) if is_clique(g, c)]
    assert seen == expect and out.examined == len(expect) and out.status == "none"


def test_scan_stops_at_first_hit_and_budget():
    g = Graph.complete(6)
    out = scan_subset_cliques(g, 2, lambda sub: sub if sub == (1, 3) else None)
    assert out.clique == (1, 3) and out.status == "found"
    out = scan_subset_cliques(g, 2, lambda sub: None, budget=4)
    assert out.status == "budget" and out.examined == 4


def test_boost_combines_subset_with_inner_result():
    g = Graph.complete(8)
    out = boost_with(g, 5, 2, lambda sub, k: tuple(range(k)))
    assert out.clique is not None and len(out.clique) >= 5 and is_clique(g, out.clique)
