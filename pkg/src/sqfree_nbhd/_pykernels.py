"""Pure-Python kernels: GF(2) rank, tree canonical codes, exhaustive
labeled-tree sweeps.

`sqfree_nbhd.kernels` prefers the compiled twin of this module and falls
back here; both expose the same API and are cross-checked by the tests.
"""
from __future__ import annotations

from itertools import product

BACKEND = "python"


def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of a matrix whose rows are little-endian bitmasks."""
    rank = 0
    pivots: list[tuple[int, int]] = []  # (pivot bit, reduced row)
    for row in rows:
        r = row
        for pb, pr in pivots:
            if r >> pb & 1:
                r ^= pr
        if r:
            pivots.append((r.bit_length() - 1, r))
            rank += 1
    return rank


def _centers(n: int, adj: list[list[int]]) -> list[int]:
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in adj[v]:
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(adj: list[list[int]], v: int, parent: int) -> bytes:
    subs = sorted(_rooted_code(adj, w, v) for w in adj[v] if w != parent)
    return b"(" + b"".join(subs) + b")"


def tree_canon(n: int, edges: list[tuple[int, int]]) -> bytes:
    """Isomorphism-invariant code of a tree given by 0-based edges."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    cs = _centers(n, adj)
    if len(cs) == 1:
        return b"[" + _rooted_code(adj, cs[0], -1) + b"]"
    c1, c2 = cs
    halves = sorted([_rooted_code(adj, c1, c2), _rooted_code(adj, c2, c1)])
    return b"[" + halves[0] + halves[1] + b"]"


def _decode_prufer_fast(
    seq: tuple[int, ...], n: int, deg: list[int], edges: list[tuple[int, int]]
) -> None:
    """Append the n-1 edges (1-based labels) of the tree with this sequence."""
    for v in range(1, n + 1):
        deg[v] = 1
    for v in seq:
        deg[v] += 1
    ptr = 1
    leaf = 0
    for v in seq:
        if leaf == 0:
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, v))
        deg[leaf] = 0
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = 0
    rest = [v for v in range(1, n + 1) if deg[v] == 1]
    edges.append((rest[0], rest[1]))


def prufer_class_reps(n: int) -> dict[bytes, tuple[tuple[int, int], ...]]:
    """Exhaust every labeled tree on n vertices via its Prufer sequence and
    keep one representative edge list per isomorphism class."""
    if n == 1:
        return {b"[()]": ()}
    if n == 2:
        return {tree_canon(2, [(0, 1)]): ((1, 2),)}
    reps: dict[bytes, tuple[tuple[int, int], ...]] = {}
    deg = [0] * (n + 1)
    for seq in product(range(1, n + 1), repeat=n - 2):
        edges: list[tuple[int, int]] = []
        _decode_prufer_fast(seq, n, deg, edges)
        code = tree_canon(n, [(a - 1, b - 1) for a, b in edges])
        if code not in reps:
            reps[code] = tuple(edges)
    return reps
