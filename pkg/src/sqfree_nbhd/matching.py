"""Matchings of a neighborhood complex: enumeration, restriction, and the
bipartite intersection graph of two equal-size matchings.

A matching is a set of pairwise vertex-disjoint facets, held as a sorted
tuple of facet indices into the ambient complex.  Enumeration runs a DFS over
facets in index order with a bitset of blocked vertices, so results come in a
canonical order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import EmptyComplex, SizeMismatch
from .ncomplex import NComplex


@dataclass(frozen=True)
class Matching:
    indices: tuple[int, ...]
    complex: NComplex

    def __len__(self) -> int:
        return len(self.indices)

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for i in self.indices:
            m |= self.complex.facets[i].mask
        return m

    def facet_masks(self) -> tuple[int, ...]:
        return tuple(self.complex.facets[i].mask for i in self.indices)

    def facet_vertex_sets(self) -> list[tuple[int, ...]]:
        return [self.complex.facet_labels(i) for i in self.indices]

    def vertex_labels(self) -> tuple[int, ...]:
        return tuple(
            sorted(
                self.complex.labels[v]
                for v in range(self.complex.n)
                if self.vertex_mask >> v & 1
            )
        )


def enumerate_matchings(
    c: NComplex, k: int, allowed_mask: int | None = None
) -> list[Matching]:
    """All k-matchings, facets in index order; k=0 gives the empty matching.

    ``allowed_mask`` restricts to facets contained in the given vertex set.
    """
    if k == 0:
        return [Matching((), c)]
    masks = c.masks
    usable = [
        i
        for i in range(len(masks))
        if allowed_mask is None or masks[i] & ~allowed_mask == 0
    ]
    out: list[Matching] = []
    chosen: list[int] = []

    def dfs(pos: int, used: int) -> None:
        if len(chosen) == k:
            out.append(Matching(tuple(chosen), c))
            return
        if len(chosen) + len(usable) - pos < k:
            return
        for p in range(pos, len(usable)):
            i = usable[p]
            if masks[i] & used == 0:
                chosen.append(i)
                dfs(p + 1, used | masks[i])
                chosen.pop()

    dfs(0, 0)
    return out


def max_matching_size(c: NComplex, allowed_mask: int | None = None) -> int:
    """Largest number of pairwise disjoint facets (within ``allowed_mask``)."""
    masks = [
        m
        for m in c.masks
        if allowed_mask is None or m & ~allowed_mask == 0
    ]
    best = 0

    def dfs(pos: int, used: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if count + (len(masks) - pos) <= best:
            return
        for p in range(pos, len(masks)):
            if masks[p] & used == 0:
                dfs(p + 1, used | masks[p], count + 1)

    dfs(0, 0, 0)
    return best


def first_matching(
    c: NComplex, k: int, allowed_mask: int | None = None
) -> Matching | None:
    """First k-matching in canonical DFS order, or None."""
    masks = c.masks
    usable = [
        i
        for i in range(len(masks))
        if allowed_mask is None or masks[i] & ~allowed_mask == 0
    ]
    chosen: list[int] = []

    def dfs(pos: int, used: int) -> bool:
        if len(chosen) == k:
            return True
        if len(chosen) + len(usable) - pos < k:
            return False
        for p in range(pos, len(usable)):
            i = usable[p]
            if masks[i] & used == 0:
                chosen.append(i)
                if dfs(p + 1, used | masks[i]):
                    return True
                chosen.pop()
        return False

    if dfs(0, 0):
        return Matching(tuple(chosen), c)
    return None


def matching_number(c: NComplex) -> int:
    if not c.facets:
        raise EmptyComplex("complex has no facets")
    return max_matching_size(c)


def maximal_matchings(c: NComplex) -> tuple[int, list[Matching]]:
    """(nu, all nu-matchings)."""
    nu = matching_number(c)
    return nu, enumerate_matchings(c, nu)


def restrict_matching(m: Matching, vertex_mask: int) -> Matching:
    """Facets of m whose vertex sets sit inside the given vertex bitset."""
    keep = tuple(
        i for i in m.indices if m.complex.facets[i].mask & ~vertex_mask == 0
    )
    return Matching(keep, m.complex)


@dataclass(frozen=True)
class BipartiteIntersectionGraph:
    """Intersection graph on the symmetric difference of two matchings.

    Common facets are removed first; an edge joins F from the left part with
    G from the right part whenever their vertex sets intersect.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]  # (facet index in left, facet index in right)
    complex: NComplex

    def degree_left(self, i: int) -> int:
        return sum(1 for a, _ in self.edges if a == i)

    def degree_right(self, j: int) -> int:
        return sum(1 for _, b in self.edges if b == j)

    def is_acyclic(self) -> bool:
        parent: dict[tuple[str, int], tuple[str, int]] = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(("L", a)), find(("R", b))
            if ra == rb:
                return False
            parent[ra] = rb
        return True


def build_B(m: Matching, n: Matching) -> BipartiteIntersectionGraph:
    """Bipartite intersection graph of two equal-size matchings."""
    if len(m) != len(n):
        raise SizeMismatch(f"matchings of sizes {len(m)} and {len(n)}")
    if m.complex is not n.complex and m.complex != n.complex:
        raise SizeMismatch("matchings live in different complexes")
    common = set(m.indices) & set(n.indices)
    left = tuple(i for i in m.indices if i not in common)
    right = tuple(j for j in n.indices if j not in common)
    facets = m.complex.facets
    edges = tuple(
        (i, j)
        for i in left
        for j in right
        if facets[i].mask & facets[j].mask
    )
    return BipartiteIntersectionGraph(left, right, edges, m.complex)
