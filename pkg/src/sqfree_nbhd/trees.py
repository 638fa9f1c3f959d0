"""Labeled trees: parsing, validation, structural queries and named families.

Vertices carry positive integer labels.  Internally vertices are re-indexed
0..n-1 (ascending label order for parsed trees, construction order for
generated families); every bitset in the package is taken over these internal
indices, and ``labels[i]`` recovers the external name.
"""
from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BadParameter,
    BadToken,
    Disconnected,
    DuplicateEdge,
    HasCycle,
    SelfLoop,
)


@dataclass(frozen=True)
class Tree:
    """Immutable tree on internal vertices 0..n-1 with external labels."""

    labels: tuple[int, ...]
    adj: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        """Internal edges as sorted pairs."""
        return frozenset(
            (u, v) for u in range(self.n) for v in self.adj[u] if u < v
        )

    @cached_property
    def label_edges(self) -> frozenset[frozenset[int]]:
        return frozenset(
            frozenset((self.labels[u], self.labels[v])) for u, v in self.edges
        )

    @cached_property
    def index_of(self) -> dict[int, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def pendants(self) -> tuple[int, ...]:
        """Internal indices of degree-1 vertices (the single vertex if n=1)."""
        if self.n == 1:
            return (0,)
        return tuple(v for v in range(self.n) if len(self.adj[v]) == 1)

    def closed_mask(self, v: int) -> int:
        """Bitset of the closed neighborhood of v."""
        m = 1 << v
        for w in self.adj[v]:
            m |= 1 << w
        return m

    def levels_from(self, root: int) -> list[int]:
        """BFS distance of every vertex from ``root``."""
        dist = [-1] * self.n
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in self.adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        return dist

    def path_between(self, u: int, v: int) -> tuple[int, ...]:
        """The unique path from u to v, as internal vertices."""
        parent = [-1] * self.n
        parent[u] = u
        frontier = [u]
        while frontier and parent[v] == -1:
            nxt = []
            for a in frontier:
                for b in self.adj[a]:
                    if parent[b] == -1:
                        parent[b] = a
                        nxt.append(b)
            frontier = nxt
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        path.reverse()
        return tuple(path)

    def components_without(self, v: int) -> tuple[int, ...]:
        """Vertex bitsets of the connected components of the tree minus v."""
        comps = []
        for start in self.adj[v]:
            mask = 1 << start
            stack = [start]
            while stack:
                a = stack.pop()
                for b in self.adj[a]:
                    if b != v and not mask >> b & 1:
                        mask |= 1 << b
                        stack.append(b)
            comps.append(mask)
        return tuple(comps)

    def mask_labels(self, mask: int) -> tuple[int, ...]:
        """External labels of a vertex bitset, sorted ascending."""
        return tuple(
            sorted(self.labels[i] for i in range(self.n) if mask >> i & 1)
        )


def from_edges(pairs: list[tuple[int, int]], lines: list[int] | None = None) -> Tree:
    """Validate an edge list (external labels) and build a Tree.

    ``lines`` optionally gives the 1-based source line of each edge so errors
    can name the offending line.
    """
    if lines is None:
        lines = list(range(1, len(pairs) + 1))
    if not pairs:
        raise BadParameter("empty edge list")
    verts = sorted({v for e in pairs for v in e})
    if verts[0] < 1:
        raise BadToken(f"vertex labels must be positive, got {verts[0]}")
    idx = {lab: i for i, lab in enumerate(verts)}
    n = len(verts)

    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    seen: set[frozenset[int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for (a, b), line in zip(pairs, lines):
        if a == b:
            raise SelfLoop(f"line {line}: self-loop at vertex {a}")
        key = frozenset((a, b))
        if key in seen:
            raise DuplicateEdge(f"line {line}: duplicate edge {a} {b}")
        seen.add(key)
        ra, rb = find(idx[a]), find(idx[b])
        if ra == rb:
            raise HasCycle(f"line {line}: edge {a} {b} closes a cycle")
        parent[ra] = rb
        adj[idx[a]].append(idx[b])
        adj[idx[b]].append(idx[a])
    if len(pairs) != n - 1:
        roots = {find(i) for i in range(n)}
        labs = sorted(verts[min(i for i in range(n) if find(i) == r)] for r in roots)
        raise Disconnected(f"{len(roots)} components; vertices {labs} are separated")
    return Tree(tuple(verts), tuple(tuple(sorted(a)) for a in adj))


def parse_tree(text: str) -> Tree:
    """Parse an edge-list document: one "u v" pair per line, '#' comments."""
    pairs: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise BadToken(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        try:
            a, b = int(toks[0]), int(toks[1])
        except ValueError:
            raise BadToken(f"line {lineno}: non-integer token in {raw.strip()!r}")
        if a < 1 or b < 1:
            raise BadToken(f"line {lineno}: labels must be positive integers")
        pairs.append((a, b))
        lines.append(lineno)
    return from_edges(pairs, lines)


def format_tree(t: Tree) -> str:
    out = []
    for u, v in sorted(
        (sorted((t.labels[a], t.labels[b])) for a, b in t.edges)
    ):
        out.append(f"{u} {v}")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class CaterpillarWitness:
    """A maximal central path plus the assignment of off-path vertices."""

    central_path: tuple[int, ...]          # external labels
    off_path: dict[int, int]               # leaf label -> path label it hangs from


def is_caterpillar(t: Tree) -> CaterpillarWitness | None:
    """Return a central-path witness if stripping all leaves leaves a path."""
    if t.n == 1:
        return CaterpillarWitness((t.labels[0],), {})
    if t.n == 2:
        return CaterpillarWitness((t.labels[0], t.labels[1]), {})
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    spine = [v for v in range(t.n) if t.degree(v) > 1]
    leafset = set(leaves)
    # degree within the spine
    sdeg = {v: sum(1 for w in t.adj[v] if w not in leafset) for v in spine}
    if any(d > 2 for d in sdeg.values()):
        return None
    ends = [v for v in spine if sdeg[v] <= 1]
    if len(spine) == 1:
        path = [spine[0]]
    else:
        if len(ends) != 2:
            return None
        start = min(ends, key=lambda v: t.labels[v])
        path = [start]
        prev = -1
        while True:
            nxts = [w for w in t.adj[path[-1]] if w not in leafset and w != prev]
            if not nxts:
                break
            prev = path[-1]
            path.append(nxts[0])
        if len(path) != len(spine):
            return None
    # extend to a maximal path: one leaf at each end (smallest label first)
    head = [w for w in t.adj[path[0]] if w in leafset]
    if head:
        path.insert(0, min(head, key=lambda v: t.labels[v]))
    tail = [w for w in t.adj[path[-1]] if w in leafset and w != path[0]]
    if tail:
        path.append(min(tail, key=lambda v: t.labels[v]))
    on_path = set(path)
    off = {}
    for v in leaves:
        if v not in on_path:
            off[t.labels[v]] = t.labels[t.adj[v][0]]
    return CaterpillarWitness(tuple(t.labels[v] for v in path), off)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


def _bfs_tree(edges: list[tuple[str, str]], anchor: str) -> tuple[Tree, dict[str, int]]:
    """Build a tree from named edges, labeling vertices 1..n in BFS order.

    Neighbors are visited in edge-insertion order, so the labeling is a
    deterministic function of the construction.
    """
    nbrs: dict[str, list[str]] = {}
    for a, b in edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    names = {anchor: 1}
    queue = deque([anchor])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if w not in names:
                names[w] = len(names) + 1
                queue.append(w)
    t = from_edges([(names[a], names[b]) for a, b in edges])
    return t, names


def path_tree(n: int) -> Tree:
    if n < 1:
        raise BadParameter("path needs n >= 1")
    if n == 1:
        return Tree((1,), ((),))
    return from_edges([(i, i + 1) for i in range(1, n)])


def whiskered_path(n: int) -> Tree:
    """A path on n vertices with one pendant attached to every path vertex."""
    if n < 1:
        raise BadParameter("whiskered_path needs n >= 1")
    edges = [(f"p{i}", f"p{i+1}") for i in range(1, n)]
    edges += [(f"p{i}", f"w{i}") for i in range(1, n + 1)]
    t, _ = _bfs_tree(edges, "p1")
    return t


def star(k: int) -> Tree:
    if k < 2:
        raise BadParameter("star needs k >= 2 leaves")
    return from_edges([(1, i) for i in range(2, k + 2)])


def fig1_tree() -> Tree:
    """The 10-vertex caterpillar used by the golden facet and power tests."""
    return from_edges(
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (5, 10)]
    )


def fig2_tree() -> Tree:
    """The 14-vertex tree used by the golden facet-order tests."""
    pairs = [(i, i + 1) for i in range(1, 11)] + [(4, 12), (12, 13), (13, 14)]
    return from_edges(pairs)


def g1_tree(n: int) -> tuple[Tree, dict[str, int]]:
    """Two adjacent centers r, s; each carries n+1 length-3 arms.

    6n+8 vertices.  The arm at r is r_i - r'_i - r''_i (names ``ri``, ``rpi``,
    ``rppi`` in the returned name map), and similarly for s.
    """
    if n < 1:
        raise BadParameter("g1 needs n >= 1")
    m = n + 1
    edges: list[tuple[str, str]] = [("r", "s")]
    for i in range(1, m + 1):
        edges += [("r", f"r{i}"), (f"r{i}", f"rp{i}"), (f"rp{i}", f"rpp{i}")]
    for i in range(1, m + 1):
        edges += [("s", f"s{i}"), (f"s{i}", f"sp{i}"), (f"sp{i}", f"spp{i}")]
    return _bfs_tree(edges, "r")


def g2_tree(n: int) -> tuple[Tree, dict[str, int]]:
    """Central path r - t - s with a pendant t1 at t; r and s each carry n
    branch vertices, every branch holding two length-2 arms.

    10n+4 vertices.  Branch i at r is r_i with arms r'_i - r''_i and
    rt_i - rtt_i (names ``ri``/``rpi``/``rppi`` and ``rti``/``rtti``).
    """
    if n < 1:
        raise BadParameter("g2 needs n >= 1")
    edges: list[tuple[str, str]] = [("r", "t"), ("t", "t1"), ("t", "s")]
    for i in range(1, n + 1):
        edges += [
            ("r", f"r{i}"),
            (f"r{i}", f"rp{i}"),
            (f"rp{i}", f"rpp{i}"),
            (f"r{i}", f"rt{i}"),
            (f"rt{i}", f"rtt{i}"),
        ]
    for i in range(1, n + 1):
        edges += [
            ("s", f"s{i}"),
            (f"s{i}", f"sp{i}"),
            (f"sp{i}", f"spp{i}"),
            (f"s{i}", f"st{i}"),
            (f"st{i}", f"stt{i}"),
        ]
    return _bfs_tree(edges, "r")


def decode_prufer(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Edges (labels 1..n) of the labeled tree with Prufer sequence ``seq``."""
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def random_tree(n: int, seed: int) -> Tree:
    """Uniform labeled tree on 1..n from a seeded Prufer sequence."""
    if n < 1:
        raise BadParameter("random_tree needs n >= 1")
    if n == 1:
        return Tree((1,), ((),))
    if n == 2:
        return from_edges([(1, 2)])
    rng = random.Random(seed)
    seq = tuple(rng.randint(1, n) for _ in range(n - 2))
    return from_edges(decode_prufer(seq, n))


def random_caterpillar(n: int, seed: int) -> Tree:
    """Seeded caterpillar on n vertices: random spine, legs spread randomly."""
    if n < 1:
        raise BadParameter("random_caterpillar needs n >= 1")
    if n <= 2:
        return path_tree(n)
    rng = random.Random(seed)
    spine = rng.randint(1, n)
    edges = [(f"p{i}", f"p{i+1}") for i in range(1, spine)]
    for j in range(n - spine):
        at = rng.randint(1, spine)
        edges.append((f"p{at}", f"l{j}"))
    t, _ = _bfs_tree(edges, "p1")
    return t


def gen_family(spec: str) -> Tree:
    """Build a named family member from a CLI descriptor like "g1:3".

    Descriptors: path:n, whiskered_path:n, star:k, fig1, fig2, g1:n, g2:n,
    random_tree:n:seed, random_caterpillar:n:seed.
    """
    parts = spec.strip().split(":")
    name, args = parts[0], parts[1:]

    def one_int(what: str) -> int:
        if len(args) != 1:
            raise BadParameter(f"{name} takes one integer parameter ({what})")
        try:
            return int(args[0])
        except ValueError:
            raise BadParameter(f"{name}: bad integer {args[0]!r}")

    def two_ints() -> tuple[int, int]:
        if len(args) != 2:
            raise BadParameter(f"{name} takes n and seed, e.g. {name}:12:7")
        try:
            return int(args[0]), int(args[1])
        except ValueError:
            raise BadParameter(f"{name}: bad integer in {args!r}")

    if name == "path":
        return path_tree(one_int("n"))
    if name == "whiskered_path":
        return whiskered_path(one_int("n"))
    if name == "star":
        return star(one_int("k"))
    if name == "fig1":
        if args:
            raise BadParameter("fig1 takes no parameters")
        return fig1_tree()
    if name == "fig2":
        if args:
            raise BadParameter("fig2 takes no parameters")
        return fig2_tree()
    if name == "g1":
        return g1_tree(one_int("n"))[0]
    if name == "g2":
        return g2_tree(one_int("n"))[0]
    if name == "random_tree":
        return random_tree(*two_ints())
    if name == "random_caterpillar":
        return random_caterpillar(*two_ints())
    raise BadParameter(f"unknown family {name!r}")
