"""Immutable undirected simple graphs stored as packed bit rows.

Row ``v`` of :attr:`Graph.rows` is a little-endian ``uint64`` bitset of the
neighbours of ``v``: bit ``j % 64`` of word ``j // 64`` is set iff ``(v, j)``
is an edge. Vertex sets are sorted tuples of ints.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import IO

import numpy as np

VertexSet = tuple[int, ...]


class GraphInputError(ValueError):
    """Raised for out-of-range vertices or malformed graph data."""


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    return tuple(sorted({int(v) for v in vertices}))


def _words(n: int) -> int:
    return max(1, (n + 63) // 64)


def pack_rows(dense: np.ndarray) -> np.ndarray:
    """Pack a boolean ``(m, n)`` matrix into ``(m, words(n))`` uint64 rows."""
    dense = np.asarray(dense, dtype=bool)
    m, n = dense.shape
    w = _words(n)
    packed = np.packbits(dense, axis=1, bitorder="little")
    out = np.zeros((m, w * 8), dtype=np.uint8)
    out[:, : packed.shape[1]] = packed
    return out.view("<u8").astype(np.uint64, copy=False).reshape(m, w)


def unpack_rows(rows: np.ndarray, n: int) -> np.ndarray:
    m = rows.shape[0]
    if m == 0:
        return np.zeros((0, n), dtype=bool)
    as_bytes = np.ascontiguousarray(rows).view(np.uint8).reshape(m, -1)
    return np.unpackbits(as_bytes, axis=1, count=n, bitorder="little").astype(bool)


def bits_to_vertices(bits: int) -> VertexSet:
    """Indices of the set bits of a Python int, ascending."""
    if bits < 0:
        raise ValueError("bitset must be non-negative")
    if bits.bit_length() > 2048:
        raw = np.frombuffer(bits.to_bytes((bits.bit_length() + 7) // 8, "little"), dtype=np.uint8)
        return tuple(int(v) for v in np.flatnonzero(np.unpackbits(raw, bitorder="little")))
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return tuple(out)


def vertices_to_bits(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


class Graph:
    """Undirected simple graph on vertices ``0..n-1``; never mutated after construction."""

    __slots__ = ("n", "rows", "_bitrows", "_edge_count")

    def __init__(self, n: int, rows: np.ndarray):
        if n < 0:
            raise GraphInputError("vertex count must be non-negative")
        rows = np.ascontiguousarray(rows, dtype=np.uint64)
        if rows.shape != (n, _words(n)):
            raise GraphInputError(f"expected rows of shape {(n, _words(n))}, got {rows.shape}")
        rows.setflags(write=False)
        self.n = n
        self.rows = rows
        self._bitrows: tuple[int, ...] | None = None
        self._edge_count: int | None = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, np.zeros((n, _words(n)), dtype=np.uint64))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        dense = ~np.eye(n, dtype=bool)
        return cls.from_dense(dense)

    @classmethod
    def from_dense(cls, dense: np.ndarray, check: bool = True) -> "Graph":
        dense = np.asarray(dense, dtype=bool)
        if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
            raise GraphInputError("adjacency matrix must be square")
        if check:
            if dense.diagonal().any():
                raise GraphInputError("self-loops are not allowed")
            if not np.array_equal(dense, dense.T):
                raise GraphInputError("adjacency matrix must be symmetric")
        return cls(dense.shape[0], pack_rows(dense))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        dense = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            dense[u, v] = dense[v, u] = True
        return cls(n, pack_rows(dense))

    # -- queries --------------------------------------------------------
    @property
    def bitrows(self) -> tuple[int, ...]:
        """Neighbourhoods as Python ints (cached)."""
        if self._bitrows is None:
            raw = self.rows.view(np.uint8).reshape(self.n, -1) if self.n else ()
            self._bitrows = tuple(int.from_bytes(r.tobytes(), "little") for r in raw)
        return self._bitrows

    def dense(self) -> np.ndarray:
        return unpack_rows(self.rows, self.n)

    def has_edge(self, u: int, v: int) -> bool:
        check_vertices(self, (u, v))
        return bool((int(self.rows[u, v >> 6]) >> (v & 63)) & 1)

    def neighbors(self, v: int) -> VertexSet:
        check_vertices(self, (v,))
        return bits_to_vertices(self.bitrows[v])

    def degrees(self) -> np.ndarray:
        return np.bitwise_count(self.rows).sum(axis=1, dtype=np.int64)

    @property
    def edge_count(self) -> int:
        if self._edge_count is None:
            self._edge_count = int(self.degrees().sum()) // 2
        return self._edge_count

    def edges(self) -> Iterable[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            row = unpack_rows(self.rows[u : u + 1], self.n)[0]
            for v in np.flatnonzero(row[u + 1 :]):
                yield u, u + 1 + int(v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.rows, other.rows)

    def __hash__(self) -> int:
        return hash((self.n, self.rows.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def check_vertices(g: Graph, s: Iterable[int]) -> None:
    for v in s:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} out of range for n={g.n}")


def set_mask(g: Graph, s: Iterable[int]) -> np.ndarray:
    """Packed uint64 mask of ``s``."""
    mask = np.zeros(_words(g.n), dtype=np.uint64)
    idx = np.fromiter(s, dtype=np.int64)
    if idx.size:
        np.bitwise_or.at(mask, idx >> 6, np.left_shift(np.uint64(1), (idx & 63).astype(np.uint64)))
    return mask


def is_clique(g: Graph, s: Sequence[int]) -> bool:
    check_vertices(g, s)
    rows = g.bitrows
    members = vertices_to_bits(s)
    for v in s:
        if (members & ~(1 << v)) & ~rows[v]:
            return False
    return True


def common_neighbors(g: Graph, s: Sequence[int]) -> VertexSet:
    """Vertices outside ``s`` adjacent to every member of ``s``."""
    check_vertices(g, s)
    return bits_to_vertices(common_neighbor_bits(g, s))


def common_neighbor_bits(g: Graph, s: Iterable[int]) -> int:
    rows = g.bitrows
    bits = (1 << g.n) - 1
    for v in s:
        bits &= rows[v]
    for v in s:
        bits &= ~(1 << v)
    return bits


def degree_in(g: Graph, v: int, within: Sequence[int]) -> int:
    check_vertices(g, (v,))
    check_vertices(g, within)
    return (g.bitrows[v] & vertices_to_bits(within)).bit_count()


def degrees_into(g: Graph, within: Iterable[int]) -> np.ndarray:
    """``degree_in(g, v, within)`` for every vertex ``v`` at once."""
    within = list(within)
    check_vertices(g, within)
    mask = set_mask(g, within)
    return np.bitwise_count(g.rows & mask).sum(axis=1, dtype=np.int64)


def induced_subgraph(g: Graph, s: Sequence[int]) -> tuple[Graph, VertexSet]:
    """Subgraph on ``s``; new vertex ``i`` is original vertex ``mapping[i]``."""
    mapping = vertex_set(s)
    check_vertices(g, mapping)
    if not mapping:
        return Graph.empty(0), mapping
    idx = np.asarray(mapping, dtype=np.int64)
    sub = unpack_rows(g.rows[idx], g.n)[:, idx]
    return Graph(len(mapping), pack_rows(sub)), mapping


def add_clique(g: Graph, s: Sequence[int]) -> Graph:
    """Copy of ``g`` with every pair inside ``s`` joined."""
    check_vertices(g, s)
    s = vertex_set(s)
    rows = g.rows.copy()
    if len(s) > 1:
        mask = set_mask(g, s)
        for v in s:
            rows[v] |= mask
            rows[v, v >> 6] &= ~np.uint64(1 << (v & 63))
    return Graph(g.n, rows)


# -- DIMACS ascii -----------------------------------------------------------

def write_dimacs(g: Graph, fh: IO[str], comments: Iterable[str] = ()) -> None:
    for line in comments:
        fh.write(f"c {line}\n")
    fh.write(f"p edge {g.n} {g.edge_count}\n")
    for u in range(g.n):
        row = unpack_rows(g.rows[u : u + 1], g.n)[0]
        targets = np.flatnonzero(row[u + 1 :]) + u + 2
        if targets.size:
            fh.write("".join(f"e {u + 1} {v}\n" for v in targets.tolist()))


def read_dimacs(lines: Iterable[str]) -> Graph:
    n = None
    us: list[int] = []
    vs: list[int] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphInputError(f"line {lineno}: bad problem line {line!r}")
            if n is not None:
                raise GraphInputError(f"line {lineno}: duplicate problem line")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise GraphInputError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise GraphInputError(f"line {lineno}: bad edge line {line!r}")
            us.append(int(parts[1]))
            vs.append(int(parts[2]))
        else:
            raise GraphInputError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphInputError("missing problem line")
    u = np.asarray(us, dtype=np.int64) - 1
    v = np.asarray(vs, dtype=np.int64) - 1
    if u.size and (u.min() < 0 or v.min() < 0 or u.max() >= n or v.max() >= n):
        raise GraphInputError("edge endpoint out of range")
    if np.any(u == v):
        raise GraphInputError("self-loop in edge list")
    dense = np.zeros((n, n), dtype=bool)
    dense[u, v] = True
    dense[v, u] = True
    return Graph(n, pack_rows(dense))
