# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels over packed uint64 adjacency rows.

Semantics match ``_pykernels`` exactly; see that module for the contracts.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

import numpy as np

BACKEND = "cython"

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil


cdef struct Search:
    const uint64_t* adj
    int n
    int W
    uint64_t* classes
    int* cur
    int* best
    int best_size
    long long nodes


cdef inline bint _any_and(const uint64_t* a, const uint64_t* b, int W) noexcept nogil:
    cdef int w
    for w in range(W):
        if a[w] & b[w]:
            return True
    return False


cdef inline bint _is_zero(const uint64_t* a, int W) noexcept nogil:
    cdef int w
    for w in range(W):
        if a[w]:
            return False
    return True


cdef int _expand(Search* st, const uint64_t* cands, int depth) noexcept nogil:
    cdef int W = st.W
    cdef int m = 0, w, i, c, v, ncol, colour
    cdef uint64_t word
    for w in range(W):
        m += popcount64(cands[w])
    cdef int* order = <int*>malloc((m + 1) * sizeof(int))
    cdef int* bound = <int*>malloc((m + 1) * sizeof(int))
    cdef uint64_t* rest = <uint64_t*>malloc(W * sizeof(uint64_t))
    cdef uint64_t* nxt = <uint64_t*>malloc(W * sizeof(uint64_t))
    if order == NULL or bound == NULL or rest == NULL or nxt == NULL:
        free(order); free(bound); free(rest); free(nxt)
        return -1
    i = 0
    for w in range(W):
        word = cands[w]
        while word:
            order[i] = w * 64 + ctz64(word)
            word &= word - 1
            i += 1
    # greedy colouring in descending index order
    ncol = 0
    bound[m] = 0
    for i in range(m - 1, -1, -1):
        v = order[i]
        c = 0
        while c < ncol:
            if not _any_and(st.classes + c * W, st.adj + v * W, W):
                break
            c += 1
        if c == ncol:
            memset(st.classes + c * W, 0, W * sizeof(uint64_t))
            ncol += 1
        st.classes[c * W + (v >> 6)] |= (<uint64_t>1) << (v & 63)
        colour = c + 1
        bound[i] = colour if colour > bound[i + 1] else bound[i + 1]
    memcpy(rest, cands, W * sizeof(uint64_t))
    cdef int rc = 0
    for i in range(m):
        if depth + bound[i] <= st.best_size:
            break
        v = order[i]
        rest[v >> 6] &= ~((<uint64_t>1) << (v & 63))
        for w in range(W):
            nxt[w] = rest[w] & st.adj[v * W + w]
        st.nodes += 1
        st.cur[depth] = v
        if not _is_zero(nxt, W):
            rc = _expand(st, nxt, depth + 1)
            if rc != 0:
                break
        elif depth + 1 > st.best_size:
            st.best_size = depth + 1
            memcpy(st.best, st.cur, (depth + 1) * sizeof(int))
    free(order); free(bound); free(rest); free(nxt)
    return rc


def max_clique(g):
    cdef int n = g.n
    if n == 0:
        return (), 0
    cdef const uint64_t[:, ::1] rows = g.rows
    cdef int W = rows.shape[1]
    cdef Search st
    st.adj = &rows[0, 0]
    st.n = n
    st.W = W
    st.classes = <uint64_t*>malloc(n * W * sizeof(uint64_t))
    st.cur = <int*>malloc((n + 1) * sizeof(int))
    st.best = <int*>malloc((n + 1) * sizeof(int))
    st.best_size = 0
    st.nodes = 0
    cdef uint64_t* cands = <uint64_t*>malloc(W * sizeof(uint64_t))
    cdef int w, rc
    if st.classes == NULL or st.cur == NULL or st.best == NULL or cands == NULL:
        free(st.classes); free(st.cur); free(st.best); free(cands)
        raise MemoryError()
    memset(cands, 0, W * sizeof(uint64_t))
    for w in range(n):
        cands[w >> 6] |= (<uint64_t>1) << (w & 63)
    with nogil:
        rc = _expand(&st, cands, 0)
    result = tuple(sorted(st.best[i] for i in range(st.best_size)))
    nodes = st.nodes
    free(st.classes); free(st.cur); free(st.best); free(cands)
    if rc != 0:
        raise MemoryError()
    return result, nodes


cdef _bits_from(vertices, int W):
    arr = np.zeros(W, dtype=np.uint64)
    for v in vertices:
        arr[v >> 6] |= np.uint64(1) << np.uint64(v & 63)
    return arr


cdef tuple _vertices_of(uint64_t[::1] bits):
    out = []
    cdef int w
    cdef uint64_t word
    for w in range(bits.shape[0]):
        word = bits[w]
        while word:
            out.append(w * 64 + ctz64(word))
            word &= word - 1
    return tuple(out)


def metropolis_run(g, state, best, const int64_t[::1] vs, const double[::1] us,
                   double inv_temp, int target, uint64_t[::1] trace=None):
    cdef const uint64_t[:, ::1] rows = g.rows
    cdef int W = rows.shape[1]
    cdef uint64_t[::1] bits = _bits_from(state, W)
    cdef uint64_t[::1] best_bits = _bits_from(best, W)
    cdef int size = len(state)
    cdef int best_size = len(best)
    cdef Py_ssize_t i, steps = 0, total = vs.shape[0]
    cdef int64_t v
    cdef int w, vw
    cdef uint64_t mask
    cdef bint ok, tracing = trace is not None
    with nogil:
        for i in range(total):
            v = vs[i]
            vw = <int>(v >> 6)
            mask = (<uint64_t>1) << (v & 63)
            if bits[vw] & mask:
                if us[i] < inv_temp:
                    bits[vw] ^= mask
                    size -= 1
            else:
                ok = True
                for w in range(W):
                    if bits[w] & ~rows[v, w]:
                        ok = False
                        break
                if ok:
                    bits[vw] |= mask
                    size += 1
                    if size > best_size:
                        best_size = size
                        for w in range(W):
                            best_bits[w] = bits[w]
            steps += 1
            if tracing:
                trace[i] = bits[0]
            if size >= target:
                break
    return _vertices_of(bits), _vertices_of(best_bits), steps


cdef inline int _select_bit(const uint64_t* bits, int W, int r) noexcept nogil:
    cdef int w, c
    cdef uint64_t word
    for w in range(W):
        c = popcount64(bits[w])
        if r < c:
            word = bits[w]
            while r > 0:
                word &= word - 1
                r -= 1
            return w * 64 + ctz64(word)
        r -= c
    return -1


def greedy_run(g, const double[::1] us):
    cdef int n = g.n
    cdef const uint64_t[:, ::1] rows = g.rows
    cdef int W = rows.shape[1]
    cdef int start = <int>(us[0] * n)
    if start > n - 1:
        start = n - 1
    cdef uint64_t[::1] cands = np.array(rows[start], dtype=np.uint64)
    clique = [start]
    cdef int i = 1, count, r, u, w
    while True:
        count = 0
        for w in range(W):
            count += popcount64(cands[w])
        if count == 0:
            break
        r = <int>(us[i] * count)
        if r > count - 1:
            r = count - 1
        u = _select_bit(&cands[0], W, r)
        clique.append(u)
        for w in range(W):
            cands[w] &= rows[u, w]
        i += 1
    return tuple(sorted(clique))
