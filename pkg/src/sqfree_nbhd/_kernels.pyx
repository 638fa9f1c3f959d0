# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: GF(2) rank, tree canonical codes, exhaustive
labeled-tree sweeps.  Mirrors `sqfree_nbhd._pykernels`."""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcmp, memcpy

BACKEND = "cython"

DEF MAXN = 24          # sweep / compiled-canon vertex cap
DEF CODELEN = 2 * MAXN + 4


def gf2_rank(list rows):
    """Rank over GF(2); rows are little-endian Python-int bitmasks."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 0
    cdef int maxbits = 0, b
    for r in rows:
        b = r.bit_length()
        if b > maxbits:
            maxbits = b
    if maxbits == 0:
        return 0
    cdef int words = (maxbits + 63) // 64
    cdef uint64_t * data = <uint64_t *> malloc(nrows * words * sizeof(uint64_t))
    cdef uint64_t * piv = <uint64_t *> malloc(nrows * words * sizeof(uint64_t))
    cdef int * pivbit = <int *> malloc(nrows * sizeof(int))
    if data == NULL or piv == NULL or pivbit == NULL:
        free(data); free(piv); free(pivbit)
        raise MemoryError()
    cdef Py_ssize_t i
    cdef bytes bs
    for i in range(nrows):
        bs = rows[i].to_bytes(words * 8, "little")
        memcpy(data + i * words, <char *> bs, words * 8)

    cdef int rank = 0, p, w, bit, topbit
    cdef uint64_t word
    cdef uint64_t * rowp
    cdef uint64_t * pp
    try:
        for i in range(nrows):
            rowp = data + i * words
            for p in range(rank):
                bit = pivbit[p]
                if rowp[bit >> 6] >> (bit & 63) & 1:
                    pp = piv + p * words
                    for w in range(words):
                        rowp[w] ^= pp[w]
            topbit = -1
            for w in range(words - 1, -1, -1):
                word = rowp[w]
                if word:
                    bit = 0
                    while word > 1:
                        word >>= 1
                        bit += 1
                    topbit = (w << 6) + bit
                    break
            if topbit >= 0:
                memcpy(piv + rank * words, rowp, words * sizeof(uint64_t))
                pivbit[rank] = topbit
                rank += 1
        return rank
    finally:
        free(data); free(piv); free(pivbit)


# --- tree canonical codes ---------------------------------------------------

cdef int _bytes_cmp(char * a, int la, char * b, int lb) noexcept nogil:
    cdef int m = memcmp(a, b, la if la < lb else lb)
    if m != 0:
        return m
    return la - lb


cdef int _code(int v, int parent, int n, int * deg, int * adj, char * out) noexcept nogil:
    """Write the rooted canonical code of the subtree at v; return length."""
    cdef char bufs[MAXN][CODELEN]
    cdef int lens[MAXN]
    cdef int order[MAXN]
    cdef int nc = 0, i, j, w, tmp, pos
    for i in range(deg[v]):
        w = adj[v * MAXN + i]
        if w != parent:
            lens[nc] = _code(w, v, n, deg, adj, bufs[nc])
            order[nc] = nc
            nc += 1
    # insertion sort by bytes order
    for i in range(1, nc):
        tmp = order[i]
        j = i - 1
        while j >= 0 and _bytes_cmp(bufs[tmp], lens[tmp], bufs[order[j]], lens[order[j]]) < 0:
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = tmp
    out[0] = c'('
    pos = 1
    for i in range(nc):
        memcpy(out + pos, bufs[order[i]], lens[order[i]])
        pos += lens[order[i]]
    out[pos] = c')'
    return pos + 1


cdef bytes _canon_c(int n, int * deg, int * adj):
    """Canonical code from filled degree/adjacency arrays (0-based)."""
    cdef int remaining = n, nlayer = 0, nnext, i, v, w
    cdef int work[MAXN]
    cdef int layer[MAXN]
    cdef int nxt[MAXN]
    cdef char codebuf[2 * CODELEN + 2]
    cdef char half2[CODELEN]
    cdef int l1, l2
    if n == 1:
        return b"[()]"
    for i in range(n):
        work[i] = deg[i]
    for i in range(n):
        if work[i] == 1:
            layer[nlayer] = i
            nlayer += 1
    while remaining > 2:
        remaining -= nlayer
        nnext = 0
        for i in range(nlayer):
            v = layer[i]
            work[v] = 0
            for j in range(deg[v]):
                w = adj[v * MAXN + j]
                if work[w] > 1:
                    work[w] -= 1
                    if work[w] == 1:
                        nxt[nnext] = w
                        nnext += 1
        for i in range(nnext):
            layer[i] = nxt[i]
        nlayer = nnext
    # layer[0..nlayer) holds the centers (1 or 2)
    cdef int c1, c2
    codebuf[0] = c'['
    if nlayer == 1:
        l1 = _code(layer[0], -1, n, deg, adj, codebuf + 1)
        codebuf[l1 + 1] = c']'
        return PyBytes_FromStringAndSize(codebuf, l1 + 2)
    c1 = layer[0]
    c2 = layer[1]
    l1 = _code(c1, c2, n, deg, adj, codebuf + 1)
    l2 = _code(c2, c1, n, deg, adj, half2)
    if _bytes_cmp(codebuf + 1, l1, half2, l2) <= 0:
        memcpy(codebuf + 1 + l1, half2, l2)
    else:
        memcpy(codebuf + 1 + l2, codebuf + 1, l1)
        memcpy(codebuf + 1, half2, l2)
    codebuf[l1 + l2 + 1] = c']'
    return PyBytes_FromStringAndSize(codebuf, l1 + l2 + 2)


def tree_canon(int n, list edges):
    """Isomorphism-invariant code of a tree given by 0-based edges."""
    if n > MAXN:
        from . import _pykernels
        return _pykernels.tree_canon(n, edges)
    cdef int deg[MAXN]
    cdef int adj[MAXN * MAXN]
    cdef int i, a, b
    for i in range(n):
        deg[i] = 0
    for a, b in edges:
        adj[a * MAXN + deg[a]] = b
        deg[a] += 1
        adj[b * MAXN + deg[b]] = a
        deg[b] += 1
    return _canon_c(n, deg, adj)


def prufer_class_reps(int n):
    """Exhaust every labeled tree on n vertices via its Prufer sequence and
    keep one representative edge list per isomorphism class."""
    if n == 1:
        return {b"[()]": ()}
    if n == 2:
        return {tree_canon(2, [(0, 1)]): ((1, 2),)}
    if n > 12:
        raise ValueError("exhaustive sweep capped at 12 vertices")
    reps = {}
    cdef int seq[12]
    cdef int degcnt[13]
    cdef int ea[12]
    cdef int eb[12]
    cdef int deg0[MAXN]
    cdef int adj0[MAXN * MAXN]
    cdef int i, k, v, ptr, leaf, r1, r2, a, b
    cdef bytes code
    for i in range(n - 2):
        seq[i] = 1
    while True:
        # decode the current sequence (labels 1..n)
        for v in range(1, n + 1):
            degcnt[v] = 1
        for i in range(n - 2):
            degcnt[seq[i]] += 1
        ptr = 1
        leaf = 0
        for i in range(n - 2):
            v = seq[i]
            if leaf == 0:
                while degcnt[ptr] != 1:
                    ptr += 1
                leaf = ptr
            ea[i] = leaf
            eb[i] = v
            degcnt[leaf] = 0
            degcnt[v] -= 1
            if degcnt[v] == 1 and v < ptr:
                leaf = v
            else:
                leaf = 0
        r1 = 0
        for v in range(1, n + 1):
            if degcnt[v] == 1:
                if r1 == 0:
                    r1 = v
                else:
                    r2 = v
        ea[n - 2] = r1
        eb[n - 2] = r2
        # canonical code
        for i in range(n):
            deg0[i] = 0
        for i in range(n - 1):
            a = ea[i] - 1
            b = eb[i] - 1
            adj0[a * MAXN + deg0[a]] = b
            deg0[a] += 1
            adj0[b * MAXN + deg0[b]] = a
            deg0[b] += 1
        code = _canon_c(n, deg0, adj0)
        if code not in reps:
            reps[code] = tuple((ea[i], eb[i]) for i in range(n - 1))
        # odometer
        k = n - 3
        while k >= 0 and seq[k] == n:
            seq[k] = 1
            k -= 1
        if k < 0:
            break
        seq[k] += 1
    return reps
