import numpy as np
import pytest
from hypothesis import strategies as st

from plantedclique._backend import available_backends
from plantedclique.graph import Graph
from plantedclique.instance import sample_gnp
from plantedclique.rng import RngState

BACKENDS = available_backends()


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return BACKENDS[request.param]


def gnp(n, p=0.5, seed=0):
    return sample_gnp(n, p, RngState(seed))


@st.composite
def graphs(draw, min_n=0, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def brute_max_clique_size(g):
    """Largest clique by checking every subset (tiny graphs)."""
    dense = g.dense()
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if len(vs) > best and all(dense[a, b] for i, a in enumerate(vs) for b in vs[i + 1 :]):
            best = len(vs)
    return best


def dense_adj(g):
    return np.asarray(g.dense(), dtype=bool)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
