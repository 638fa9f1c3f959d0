"""Exact monomial arithmetic: monomials, minimal generating sets, closed
neighborhood ideals, squarefree powers, graded components, colon ideals and
the lcm lattice.

Monomials are dense exponent tuples; squarefree data coming from matchings is
bridged to and from vertex bitsets.  All generator lists are kept in a
canonical order (degree, then exponent tuple) so outputs are reproducible.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from math import comb

from .errors import BadParameter, BudgetExceeded, KTooLarge
from .matching import enumerate_matchings, matching_number
from .ncomplex import NComplex, neighborhood_facets
from .trees import Tree

DEFAULT_PRODUCT_BUDGET = 10_000_000
DEFAULT_LATTICE_GENS = 24


@dataclass(frozen=True)
class Monomial:
    exps: tuple[int, ...]

    @cached_property
    def degree(self) -> int:
        return sum(self.exps)

    @cached_property
    def support_mask(self) -> int:
        m = 0
        for i, e in enumerate(self.exps):
            if e:
                m |= 1 << i
        return m

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other) componentwise."""
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exps, other.exps)))

    def __str__(self) -> str:
        return format_monomial(self)


def monomial_from_mask(mask: int, nvars: int) -> Monomial:
    return Monomial(tuple(1 if mask >> i & 1 else 0 for i in range(nvars)))


def monomial_one(nvars: int) -> Monomial:
    return Monomial((0,) * nvars)


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m.exps):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, nvars: int) -> Monomial:
    text = text.strip()
    if text == "1":
        return monomial_one(nvars)
    exps = [0] * nvars
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise BadParameter(f"bad monomial factor {factor!r}")
        idx = int(m.group(1)) - 1
        if not 0 <= idx < nvars:
            raise BadParameter(f"variable x{idx + 1} out of range (nvars={nvars})")
        exps[idx] += int(m.group(2) or 1)
    return Monomial(tuple(exps))


def _canonical(gens: list[Monomial]) -> tuple[Monomial, ...]:
    return tuple(sorted(set(gens), key=lambda g: (g.degree, g.exps)))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held by its minimal generators in canonical order."""

    nvars: int
    gens: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    @cached_property
    def max_degree(self) -> int:
        """deg(I): largest degree among the minimal generators."""
        return max((g.degree for g in self.gens), default=0)

    @cached_property
    def min_degree(self) -> int:
        return min((g.degree for g in self.gens), default=0)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)


def minimalize(monomials: list[Monomial], nvars: int) -> MonomialIdeal:
    """Divisibility-minimal subset of the given monomials, canonically ordered."""
    uniq = sorted(set(monomials), key=lambda g: (g.degree, g.exps))
    kept: list[Monomial] = []
    for m in uniq:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return MonomialIdeal(nvars, tuple(kept))


def ideal_from_masks(masks: list[int], nvars: int) -> MonomialIdeal:
    return minimalize([monomial_from_mask(m, nvars) for m in masks], nvars)


def ni_ideal(t: Tree) -> MonomialIdeal:
    """Squarefree ideal with one generator per facet of the neighborhood
    complex of t."""
    c = neighborhood_facets(t)
    return MonomialIdeal(
        t.n, _canonical([monomial_from_mask(f.mask, t.n) for f in c.facets])
    )


def sqfree_power_matchings(
    t: Tree, k: int, c: NComplex | None = None
) -> MonomialIdeal:
    """Generators of the k-th squarefree power of the closed neighborhood
    ideal of a tree, one generator per k-matching.

    On trees the products of distinct k-matchings are distinct and mutually
    non-dividing, so the list needs no minimalization.
    """
    if k < 1:
        raise BadParameter("k must be >= 1")
    if c is None:
        c = neighborhood_facets(t)
    nu = matching_number(c)
    if k > nu:
        raise KTooLarge(f"k={k} exceeds the matching number {nu}")
    gens = [
        monomial_from_mask(m.vertex_mask, t.n) for m in enumerate_matchings(c, k)
    ]
    return MonomialIdeal(t.n, _canonical(gens))


def sqfree_power_bruteforce(
    i: MonomialIdeal, k: int, budget: int = DEFAULT_PRODUCT_BUDGET
) -> MonomialIdeal:
    """Independent route to the k-th squarefree power: minimalize the
    squarefree members of all k-fold products of generators."""
    if k < 1:
        raise BadParameter("k must be >= 1")
    count = comb(len(i.gens) + k - 1, k)
    if count > budget:
        raise BudgetExceeded(f"{count} products exceed budget {budget}")
    found: set[tuple[int, ...]] = set()
    for combo in combinations_with_replacement(i.gens, k):
        exps = [0] * i.nvars
        for g in combo:
            for v, e in enumerate(g.exps):
                exps[v] += e
        if all(e <= 1 for e in exps):
            found.add(tuple(exps))
    return minimalize([Monomial(e) for e in found], i.nvars)


def graded_component(i: MonomialIdeal, a: int) -> list[Monomial]:
    """All monomials of degree a lying in I; this is the minimal generating
    set of the degree-a component (same-degree monomials never divide one
    another properly)."""
    if a < 0:
        raise BadParameter("degree must be nonnegative")
    out: set[tuple[int, ...]] = set()

    def extend(exps: list[int], remaining: int, start: int) -> None:
        if remaining == 0:
            out.add(tuple(exps))
            return
        for v in range(start, i.nvars):
            exps[v] += 1
            extend(exps, remaining - 1, v)
            exps[v] -= 1

    for g in i.gens:
        if g.degree <= a:
            extend(list(g.exps), a - g.degree, 0)
    return sorted((Monomial(e) for e in out), key=lambda m: m.exps)


def squarefree_component(i: MonomialIdeal, a: int) -> list[Monomial]:
    """The squarefree monomials of degree a lying in I."""
    out: set[tuple[int, ...]] = set()

    def extend(exps: list[int], remaining: int, start: int) -> None:
        if remaining == 0:
            out.add(tuple(exps))
            return
        for v in range(start, i.nvars):
            if exps[v] == 0:
                exps[v] = 1
                extend(exps, remaining - 1, v + 1)
                exps[v] = 0

    for g in i.gens:
        if g.degree <= a and g.is_squarefree():
            extend(list(g.exps), a - g.degree, 0)
    return sorted((Monomial(e) for e in out), key=lambda m: m.exps)


def colon(i: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """The colon ideal I : f, i.e. minimalize({g / gcd(g, f)})."""
    return minimalize([g.quotient(f) for g in i.gens], i.nvars)


def lcm_lattice(
    i: MonomialIdeal, max_gens: int = DEFAULT_LATTICE_GENS, budget: int | None = None
) -> set[tuple[int, ...]]:
    """All joins (componentwise max) of nonempty generator subsets.

    Computed as the join-closure of the generator multidegrees, which equals
    the set of subset-joins; ``budget`` caps the closure size.
    """
    if budget is None and len(i.gens) > max_gens:
        raise BudgetExceeded(
            f"{len(i.gens)} generators exceed the default lattice bound "
            f"{max_gens}; pass a budget to override"
        )
    return lcm_closure([g.exps for g in i.gens], budget)


def lcm_closure(
    vectors: list[tuple[int, ...]], budget: int | None = None
) -> set[tuple[int, ...]]:
    closed: set[tuple[int, ...]] = set(vectors)
    frontier = list(closed)
    while frontier:
        nxt = []
        for b in frontier:
            for g in vectors:
                j = tuple(max(x, y) for x, y in zip(b, g))
                if j not in closed:
                    closed.add(j)
                    nxt.append(j)
                    if budget is not None and len(closed) > budget:
                        raise BudgetExceeded(
                            f"lcm closure exceeds budget {budget}"
                        )
        frontier = nxt
    return closed


def ideal_to_json(i: MonomialIdeal) -> dict:
    return {
        "schema": 1,
        "nvars": i.nvars,
        "gens": [format_monomial(g) for g in i.gens],
    }


def ideal_from_json(doc: dict | str) -> MonomialIdeal:
    if isinstance(doc, str):
        doc = json.loads(doc)
    nvars = doc["nvars"]
    gens = [parse_monomial(s, nvars) for s in doc["gens"]]
    return minimalize(gens, nvars)
