"""Time the compiled kernels against the pure-Python fallback on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from plantedclique._backend import available_backends
from plantedclique.instance import PlantParams, owf_evaluate, sample_gnp
from plantedclique.rng import RngState


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def cases():
    clique_graph = sample_gnp(130, 0.5, RngState(1))
    greedy_graph = sample_gnp(2000, 0.5, RngState(2))
    greedy_us = [RngState(3).child(f"run/{i}").uniforms(greedy_graph.n + 1) for i in range(200)]
    chain = owf_evaluate(PlantParams(300, 0.5, 30), RngState(4)).public_graph
    r = RngState(5)
    steps = 500_000
    vs, us = r.integers(chain.n, steps), r.uniforms(steps)
    return {
        "max_clique G(130,1/2)": lambda k: k.max_clique(clique_graph),
        "greedy x200 G(2000,1/2)": lambda k: [k.greedy_run(greedy_graph, u) for u in greedy_us],
        "metropolis 5e5 steps n=300": lambda k: k.metropolis_run(chain, (), (), vs, us, 0.5, chain.n + 1),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernels are not built; only the Python timings are shown")
    print(f"{'kernel':30} " + " ".join(f"{name:>10}" for name in backends) + "   speedup")
    for label, fn in cases().items():
        timings, outputs = {}, {}
        for name, mod in backends.items():
            timings[name], outputs[name] = best_of(args.repeat, lambda: fn(mod))
        if len(set(map(repr, outputs.values()))) != 1:
            raise SystemExit(f"backends disagree on {label}")
        speed = timings["python"] / timings["cython"] if "cython" in timings else float("nan")
        print(f"{label:30} " + " ".join(f"{timings[n]:9.4f}s" for n in backends) + f"   {speed:6.1f}x")


if __name__ == "__main__":
    main()
