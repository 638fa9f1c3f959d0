"""Total orders on facets and on maximum matchings of a neighborhood
complex.

Rooting the tree at a pendant vertex assigns every facet a key
(size, level, tie): the facet cardinality, the distance of its center from
the root, and a tie index among vertices at the same level.  Keys order
facets (small size first, then small level, then small tie index), matchings
compare lexicographically after sorting their facets in decreasing key
order, and the refined order compares the count of 2-element facets, then
the overlap with the lex-top matching, then lex.

The tie index ranks the vertices of a level by descending label; any fixed
per-level ranking yields the same ordered structure, and this one matches
the published key tables used by the golden tests.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyComplex, NotPendant, SizeMismatch
from .matching import Matching, maximal_matchings
from .ncomplex import NComplex, neighborhood_facets
from .trees import Tree


@dataclass(frozen=True)
class FacetKey:
    size: int
    level: int
    tie: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.size, self.level, self.tie)


def default_root(t: Tree) -> int:
    """Smallest-labeled pendant vertex (external label)."""
    return min(t.labels[v] for v in t.pendants)


def facet_keys(
    t: Tree, root: int | None = None, c: NComplex | None = None
) -> dict[int, FacetKey]:
    """Key every facet of the neighborhood complex of ``t``.

    ``root`` is an external label and must be a pendant vertex (any vertex
    of the 1-vertex tree).  Returns facet index -> key.
    """
    if c is None:
        c = neighborhood_facets(t)
    if root is None:
        root = default_root(t)
    if root not in t.index_of:
        raise NotPendant(f"vertex {root} not in tree")
    r = t.index_of[root]
    if t.n > 1 and t.degree(r) != 1:
        raise NotPendant(f"vertex {root} has degree {t.degree(r)}")
    levels = t.levels_from(r)
    by_level: dict[int, list[int]] = {}
    for v in range(t.n):
        by_level.setdefault(levels[v], []).append(v)
    tie: dict[int, int] = {}
    for verts in by_level.values():
        for pos, v in enumerate(
            sorted(verts, key=lambda x: -t.labels[x]), start=1
        ):
            tie[v] = pos
    return {
        i: FacetKey(f.size(), levels[f.center], tie[f.center])
        for i, f in enumerate(c.facets)
    }


def matching_key_sequence(
    m: Matching, keys: dict[int, FacetKey]
) -> tuple[tuple[int, int, int], ...]:
    """Facet keys of m sorted in decreasing facet order (greatest first)."""
    return tuple(sorted(keys[i].as_tuple() for i in m.indices))


def compare_matchings_lex(
    m: Matching, n: Matching, keys: dict[int, FacetKey]
) -> int:
    """+1 if m is lex-greater, -1 if smaller, 0 if equal."""
    if len(m) != len(n):
        raise SizeMismatch(f"matchings of sizes {len(m)} and {len(n)}")
    a, b = matching_key_sequence(m, keys), matching_key_sequence(n, keys)
    if a == b:
        return 0
    # keys sort ascending = facets in decreasing order; smaller tuple wins
    return 1 if a < b else -1


@dataclass(frozen=True)
class OrderedMatching:
    matching: Matching
    key_sequence: tuple[tuple[int, int, int], ...]
    beta: int          # number of 2-element facets
    level: int         # size of the matching minus overlap with the top one


@dataclass(frozen=True)
class OrderedGenerators:
    """All maximum matchings sorted descending by the refined total order."""

    root: int
    keys: dict[int, FacetKey]
    nu: int
    matchings: tuple[OrderedMatching, ...]
    top_index: int  # position of the lex-maximal matching U in ``matchings``

    @property
    def top(self) -> OrderedMatching:
        return self.matchings[self.top_index]


def order_ell(
    t: Tree, root: int | None = None, c: NComplex | None = None
) -> OrderedGenerators:
    """Sort the maximum matchings by the refined total order.

    Descending: more 2-element facets first; ties by smaller level (larger
    overlap with the lex-top matching U); remaining ties lexicographically.
    """
    if c is None:
        c = neighborhood_facets(t)
    if not c.facets:
        raise EmptyComplex("complex has no facets")
    keys = facet_keys(t, root, c)
    nu, matchings = maximal_matchings(c)
    seqs = {m.indices: matching_key_sequence(m, keys) for m in matchings}
    u = min(matchings, key=lambda m: seqs[m.indices])
    uset = set(u.indices)
    annotated = []
    for m in matchings:
        beta = sum(1 for i in m.indices if c.facets[i].size() == 2)
        level = nu - len(uset & set(m.indices))
        annotated.append(OrderedMatching(m, seqs[m.indices], beta, level))
    annotated.sort(key=lambda om: (-om.beta, om.level, om.key_sequence))
    top_index = next(
        i for i, om in enumerate(annotated) if om.matching.indices == u.indices
    )
    return OrderedGenerators(
        root if root is not None else default_root(t),
        keys,
        nu,
        tuple(annotated),
        top_index,
    )
