"""Closed neighborhood complexes of trees.

The facets are the inclusion-minimal closed neighborhoods N[u]; each facet is
stored as a vertex bitset together with its center u.  For the 2-vertex tree,
where both closed neighborhoods coincide, the smaller center is kept.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import BadParameter
from .trees import Tree


@dataclass(frozen=True)
class Facet:
    mask: int
    center: int  # internal vertex index

    def size(self) -> int:
        return bin(self.mask).count("1")


@dataclass(frozen=True)
class NComplex:
    facets: tuple[Facet, ...]
    n: int
    labels: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.facets)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(f.mask for f in self.facets)

    def facet_labels(self, i: int) -> tuple[int, ...]:
        mask = self.facets[i].mask
        return tuple(
            sorted(self.labels[v] for v in range(self.n) if mask >> v & 1)
        )

    def facet_sets(self) -> list[tuple[int, ...]]:
        return [self.facet_labels(i) for i in range(len(self.facets))]


def neighborhood_facets(t: Tree) -> NComplex:
    """Inclusion-minimal closed neighborhoods of t, ordered by center label."""
    closed = [(t.closed_mask(v), v) for v in range(t.n)]
    facets = []
    for mask, center in closed:
        dominated = any(
            other != mask and other & mask == other for other, _ in closed
        )
        if dominated:
            continue
        # equal closed neighborhoods (2-vertex tree): keep the smaller center
        twin = min(c for m, c in closed if m == mask)
        if twin != center:
            continue
        facets.append(Facet(mask, center))
    facets.sort(key=lambda f: t.labels[f.center])
    return NComplex(tuple(facets), t.n, t.labels)


def is_simplicial_forest(c: NComplex) -> tuple[bool, list[int]]:
    """Iterated leaf removal; returns (emptied, removal order of centers).

    A facet F is a leaf of the current collection if it is alone or some
    other facet G contains F's intersection with every remaining facet.
    Ties are broken by smallest center label.  Removal order is a
    certificate of an elimination order when the check succeeds.
    """
    remaining = list(range(len(c.facets)))
    order: list[int] = []
    while remaining:
        leaf = None
        for i in remaining:
            others = [j for j in remaining if j != i]
            if not others:
                leaf = i
                break
            fi = c.facets[i].mask
            joined = 0
            for j in others:
                joined |= fi & c.facets[j].mask
            if any(fi & c.facets[j].mask == joined for j in others):
                leaf = i
                break
        if leaf is None:
            return False, order
        remaining.remove(leaf)
        order.append(c.labels[c.facets[leaf].center])
    return True, order


def complex_to_json(c: NComplex) -> dict:
    return {
        "schema": 1,
        "n": c.n,
        "facets": [
            {
                "center": c.labels[f.center],
                "vertices": list(c.facet_labels(i)),
            }
            for i, f in enumerate(c.facets)
        ],
    }


def complex_from_json(doc: dict | str) -> NComplex:
    """Rebuild a complex from its JSON export (round-trip inverse)."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    n = doc["n"]
    seen_labels: set[int] = set()
    for f in doc["facets"]:
        seen_labels.update(f["vertices"])
        seen_labels.add(f["center"])
    labels = tuple(sorted(seen_labels))
    if len(labels) != n:
        raise BadParameter("facet vertices inconsistent with n")
    index = {lab: i for i, lab in enumerate(labels)}
    facets = []
    for f in doc["facets"]:
        mask = 0
        for v in f["vertices"]:
            mask |= 1 << index[v]
        facets.append(Facet(mask, index[f["center"]]))
    return NComplex(tuple(facets), n, labels)
