"""Pure-Python kernels. Reference semantics for the compiled ``_kernels`` module.

Both backends consume identical pre-drawn random arrays, so for the same
inputs they return identical outputs.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, VertexSet, bits_to_vertices, vertices_to_bits

BACKEND = "python"


def max_clique(g: Graph) -> tuple[VertexSet, int]:
    """Lexicographically smallest maximum clique and the number of search nodes.

    Branch and bound over candidates in ascending index order. The bound for
    the suffix starting at each candidate is the number of colours a greedy
    colouring (assigned in descending index order) uses on that suffix.
    """
    adj = g.bitrows
    best: list[int] = []
    cur: list[int] = []
    nodes = 0

    def expand(cands: int) -> None:
        nonlocal best, nodes
        order = bits_to_vertices(cands)
        m = len(order)
        classes: list[int] = []
        bound = [0] * (m + 1)
        for i in range(m - 1, -1, -1):
            v = order[i]
            nb = adj[v]
            for c, cls in enumerate(classes):
                if not cls & nb:
                    classes[c] = cls | (1 << v)
                    colour = c + 1
                    break
            else:
                classes.append(1 << v)
                colour = len(classes)
            bound[i] = max(colour, bound[i + 1])
        rest = cands
        depth = len(cur)
        for i, v in enumerate(order):
            if depth + bound[i] <= len(best):
                break
            rest &= ~(1 << v)
            nxt = rest & adj[v]
            nodes += 1
            cur.append(v)
            if nxt:
                expand(nxt)
            elif depth + 1 > len(best):
                best = cur.copy()
            cur.pop()

    if g.n:
        expand((1 << g.n) - 1)
    return tuple(best), nodes


def metropolis_run(
    g: Graph,
    state: VertexSet,
    best: VertexSet,
    vs: np.ndarray,
    us: np.ndarray,
    inv_temp: float,
    target: int,
    trace: np.ndarray | None = None,
) -> tuple[VertexSet, VertexSet, int]:
    """Run ``len(vs)`` Metropolis steps, stopping once the state reaches ``target``.

    Returns (final state, best state seen, steps executed). When ``trace`` is
    given, ``trace[i]`` receives the low 64 bits of the state after step ``i``.
    """
    adj = g.bitrows
    bits = vertices_to_bits(state)
    size = len(state)
    best_bits = vertices_to_bits(best)
    best_size = len(best)
    steps = 0
    vs_l = vs.tolist()
    us_l = us.tolist()
    for i in range(len(vs_l)):
        v = vs_l[i]
        mask = 1 << v
        if bits & mask:
            if us_l[i] < inv_temp:
                bits ^= mask
                size -= 1
        elif not bits & ~adj[v]:
            bits |= mask
            size += 1
            if size > best_size:
                best_bits, best_size = bits, size
        steps += 1
        if trace is not None:
            trace[i] = bits & 0xFFFFFFFFFFFFFFFF
        if size >= target:
            break
    return bits_to_vertices(bits), bits_to_vertices(best_bits), steps


def greedy_run(g: Graph, us: np.ndarray) -> VertexSet:
    """One pass of randomized greedy; ``us`` holds at least ``n + 1`` uniforms."""
    adj = g.bitrows
    n = g.n
    start = min(int(us[0] * n), n - 1)
    clique = [start]
    cands = adj[start]
    i = 1
    while cands:
        members = bits_to_vertices(cands)
        u = members[min(int(us[i] * len(members)), len(members) - 1)]
        clique.append(u)
        cands &= adj[u]
        i += 1
    return tuple(sorted(clique))
