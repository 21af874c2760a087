"""Compiled and pure-Python kernels must agree exactly."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plantedclique import _pykernels
from plantedclique._backend import BACKEND, available_backends
from plantedclique.graph import is_clique
from plantedclique.instance import PlantParams, owf_evaluate
from plantedclique.rng import RngState

from conftest import gnp, graphs

pairs = available_backends()
needs_both = pytest.mark.skipif("cython" not in pairs, reason="compiled kernels not built")


def test_selected_backend_is_known():
    assert BACKEND in pairs


@needs_both
@given(graphs(max_n=14))
@settings(max_examples=100, deadline=None)
def test_max_clique_parity_small(g):
    assert pairs["cython"].max_clique(g) == pairs["python"].max_clique(g)


@needs_both
@pytest.mark.parametrize("n,p,seed", [(70, 0.5, 1), (130, 0.5, 2), (200, 0.3, 3), (64, 0.9, 4)])
def test_max_clique_parity_multiword(n, p, seed):
    g = gnp(n, p, seed)
    assert pairs["cython"].max_clique(g) == pairs["python"].max_clique(g)


@needs_both
@given(graphs(min_n=1, max_n=14), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_greedy_parity(g, seed):
    us = RngState(seed).uniforms(g.n + 1)
    got = pairs["cython"].greedy_run(g, us)
    assert got == pairs["python"].greedy_run(g, us)
    assert is_clique(g, got)


@needs_both
@pytest.mark.parametrize("n", [50, 64, 65, 150])
def test_metropolis_parity_with_trace_and_target(n):
    inst = owf_evaluate(PlantParams(n, 0.5, 10), RngState(n))
    r = RngState(1)
    vs, us = r.integers(n, 20_000), r.uniforms(20_000)
    outs = []
    for name in ("cython", "python"):
        trace = np.zeros(20_000, dtype=np.uint64)
        outs.append((pairs[name].metropolis_run(inst.public_graph, (), (), vs, us, 0.5, 9, trace), trace))
    assert outs[0][0] == outs[1][0]
    assert np.array_equal(outs[0][1], outs[1][1])


def test_greedy_is_maximal():
    g = gnp(120, 0.5, 9)
    clique = _pykernels.greedy_run(g, RngState(0).uniforms(121))
    rows = g.bitrows
    common = (1 << g.n) - 1
    for v in clique:
        common &= rows[v]
    assert common == 0


def test_env_var_forces_python_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, PLANTEDCLIQUE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import plantedclique; print(plantedclique.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
