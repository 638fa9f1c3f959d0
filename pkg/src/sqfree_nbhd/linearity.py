"""Componentwise-linearity machinery for highest squarefree powers.

Two forbidden configurations decide the verdict for a tree:

* C1 asks for a five-vertex path r1, r, s, t, t1 through a branch vertex s
  (degree >= 3) such that the closed neighborhoods of r and of t each extend
  one common near-maximum matching Y to a maximum matching.
* C2 asks for a path p1..p_{3n-1} between two branch vertices such that the
  two interleaved families of closed neighborhoods along the path each
  extend a common (nu-n)-matching Y to a maximum matching.

A tree admits neither configuration exactly when the top squarefree power
of its closed neighborhood ideal is componentwise linear; in that case the
refined matching order gives linear quotients.  ``cwl_verdict`` bundles the
three routes (conditions, linear quotients, optional Betti engine) and
reports whether they agree.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotEquigenerated
from .ideals import Monomial, MonomialIdeal, monomial_from_mask
from .matching import (
    Matching,
    first_matching,
    matching_number,
    max_matching_size,
)
from .ncomplex import NComplex, neighborhood_facets
from .orders import OrderedGenerators, order_ell
from .trees import Tree


@dataclass(frozen=True)
class ConditionWitness:
    kind: str                       # "C1" or "C2"
    path: tuple[int, ...]           # external vertex labels along the path
    base: tuple[tuple[int, ...], ...]       # facets of Y as label tuples
    matchings: tuple[tuple[tuple[int, ...], ...], ...]  # the two matchings
    component_degree: int           # degree of the disconnected component pair


def _facet_center_map(t: Tree, c: NComplex) -> dict[int, int]:
    return {f.center: i for i, f in enumerate(c.facets)}


def _matching_sets(c: NComplex, indices: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(c.facet_labels(i) for i in indices))


def check_c1(t: Tree, c: NComplex | None = None) -> ConditionWitness | None:
    """First C1 configuration in scan order, or None when the tree has none.

    Scan: branch vertices by label, neighbor pairs by label; the common
    matching Y is the first (nu-1)-matching avoiding both neighborhoods.
    """
    if c is None:
        c = neighborhood_facets(t)
    if not c.facets:
        return None
    nu = matching_number(c)
    center_of = _facet_center_map(t, c)
    full = (1 << t.n) - 1
    for s in sorted(range(t.n), key=lambda v: t.labels[v]):
        if t.degree(s) < 3:
            continue
        nbrs = sorted(t.adj[s], key=lambda v: t.labels[v])
        for ai in range(len(nbrs)):
            for bi in range(ai + 1, len(nbrs)):
                r, t2 = nbrs[ai], nbrs[bi]
                if t.degree(r) < 2 or t.degree(t2) < 2:
                    continue
                if r not in center_of or t2 not in center_of:
                    continue
                forbidden = t.closed_mask(r) | t.closed_mask(t2)
                allowed = full & ~forbidden
                y = first_matching(c, nu - 1, allowed)
                if y is None:
                    continue
                r1 = min(
                    (w for w in t.adj[r] if w != s), key=lambda v: t.labels[v]
                )
                t1 = min(
                    (w for w in t.adj[t2] if w != s), key=lambda v: t.labels[v]
                )
                m_r = tuple(sorted(y.indices + (center_of[r],)))
                m_t = tuple(sorted(y.indices + (center_of[t2],)))
                # degree of the equal-degree component elements built from
                # the witness: |V| of one matching plus the spare leaves of
                # the other end's neighborhood
                comp_deg = (
                    bin(Matching(m_r, c).vertex_mask).count("1")
                    + t.degree(t2)
                    - 2
                )
                return ConditionWitness(
                    "C1",
                    (
                        t.labels[r1],
                        t.labels[r],
                        t.labels[s],
                        t.labels[t2],
                        t.labels[t1],
                    ),
                    _matching_sets(c, y.indices),
                    (_matching_sets(c, m_r), _matching_sets(c, m_t)),
                    comp_deg,
                )
    return None


def check_c2(t: Tree, c: NComplex | None = None) -> ConditionWitness | None:
    """First C2 configuration in scan order, or None when the tree has none.

    Trees have unique paths, so the scan runs over ordered pairs of branch
    vertices whose path length fits 3n-1 vertices, then finds the first
    (nu-n)-matching avoiding both neighborhood families.
    """
    if c is None:
        c = neighborhood_facets(t)
    if not c.facets:
        return None
    nu = matching_number(c)
    center_of = _facet_center_map(t, c)
    full = (1 << t.n) - 1
    branches = sorted(
        (v for v in range(t.n) if t.degree(v) >= 3), key=lambda v: t.labels[v]
    )
    for r in branches:
        for s in branches:
            if t.labels[r] >= t.labels[s]:
                continue
            path = t.path_between(r, s)
            if len(path) % 3 != 2:
                continue
            n_steps = (len(path) + 1) // 3
            if n_steps > nu:
                continue
            fam1 = [path[j] for j in range(0, len(path), 3)]
            fam2 = [path[j] for j in range(1, len(path), 3)]
            if any(v not in center_of for v in fam1 + fam2):
                continue
            forbidden = 0
            for v in fam1 + fam2:
                forbidden |= t.closed_mask(v)
            y = first_matching(c, nu - n_steps, full & ~forbidden)
            if y is None:
                continue
            m1 = tuple(sorted(y.indices + tuple(center_of[v] for v in fam1)))
            m2 = tuple(sorted(y.indices + tuple(center_of[v] for v in fam2)))
            comp_deg = (
                bin(Matching(m1, c).vertex_mask).count("1") + t.degree(s) - 3
            )
            return ConditionWitness(
                "C2",
                tuple(t.labels[v] for v in path),
                _matching_sets(c, y.indices),
                (_matching_sets(c, m1), _matching_sets(c, m2)),
                comp_deg,
            )
    return None


@dataclass(frozen=True)
class LinearQuotientsResult:
    ok: bool
    violation: tuple[int, int] | None = None  # (i, j) positions, 0-based


def has_linear_quotients(gens: list[Monomial]) -> LinearQuotientsResult:
    """Check the standard monomial linear-quotients test for this exact
    ordering: each successive colon must be generated by variables.

    The colon of the prefix by u_i is generated by the quotients
    u_j / gcd(u_j, u_i); it is variable-generated iff every such quotient is
    divisible by some degree-one quotient.
    """
    if not gens:
        raise NotEquigenerated("need at least one generator")
    for i in range(1, len(gens)):
        quots = [gens[j].quotient(gens[i]) for j in range(i)]
        linear = [q for q in quots if q.degree == 1]
        for j, q in enumerate(quots):
            if q.degree == 0:
                # u_j divides u_i: not a minimal system, treat as violation
                return LinearQuotientsResult(False, (i, j))
            if q.degree == 1:
                continue
            if not any(l.divides(q) for l in linear):
                return LinearQuotientsResult(False, (i, j))
    return LinearQuotientsResult(True, None)


def find_linear_quotients_order(gens: list[Monomial]) -> list[int] | None:
    """Backtracking search for any linear-quotients order; diagnostic only.

    Returns positions into ``gens`` or None if no order works.
    """
    m = len(gens)
    chosen: list[int] = []
    rest = set(range(m))

    def colon_linear(i: int) -> bool:
        quots = [gens[j].quotient(gens[i]) for j in chosen]
        linear = [q for q in quots if q.degree == 1]
        return all(
            q.degree == 1 or any(l.divides(q) for l in linear) for q in quots
        )

    def back() -> bool:
        if not rest:
            return True
        for i in sorted(rest):
            if colon_linear(i):
                chosen.append(i)
                rest.remove(i)
                if back():
                    return True
                rest.add(i)
                chosen.pop()
        return False

    return chosen if back() else None


@dataclass(frozen=True)
class LinearRelatedResult:
    ok: bool
    disconnected_pair: tuple[int, int] | None = None


def is_linearly_related(component: list[Monomial]) -> LinearRelatedResult:
    """Connectivity test on the degree-(d+1) lcm graph.

    For generators u, v of common degree d, the graph joins pairs whose lcm
    has degree d+1; u and v must be connected inside the subgraph induced on
    the divisors of lcm(u, v).  Returns the first disconnected pair
    otherwise.
    """
    m = len(component)
    if m == 0:
        return LinearRelatedResult(True)
    d = component[0].degree
    if any(g.degree != d for g in component):
        raise NotEquigenerated("generators must share one degree")
    adj: list[list[int]] = [[] for _ in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            if component[a].lcm(component[b]).degree == d + 1:
                adj[a].append(b)
                adj[b].append(a)
    for a in range(m):
        for b in range(a + 1, m):
            big = component[a].lcm(component[b])
            nodes = {i for i in range(m) if component[i].divides(big)}
            seen = {a}
            stack = [a]
            while stack:
                x = stack.pop()
                if x == b:
                    break
                for y in adj[x]:
                    if y in nodes and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if b not in seen:
                return LinearRelatedResult(False, (a, b))
    return LinearRelatedResult(True)


@dataclass
class CwlReport:
    c1: ConditionWitness | None
    c2: ConditionWitness | None
    lq_under_ell: LinearQuotientsResult
    verdict: bool
    ordered: OrderedGenerators
    betti_cwl: bool | None = None
    agreement: bool = True

    def routes(self) -> dict[str, bool]:
        out = {
            "conditions": self.c1 is None and self.c2 is None,
            "linear_quotients": self.lq_under_ell.ok,
        }
        if self.betti_cwl is not None:
            out["betti_engine"] = self.betti_cwl
        return out


def ell_ordered_generators(t: Tree, og: OrderedGenerators | None = None) -> list[Monomial]:
    """Generators of the top squarefree power, sorted descending by the
    refined matching order."""
    if og is None:
        og = order_ell(t)
    return [
        monomial_from_mask(om.matching.vertex_mask, t.n) for om in og.matchings
    ]


def cwl_verdict(
    t: Tree, include_betti: bool = False, field: str = "gf2"
) -> CwlReport:
    """Decide componentwise linearity of the top squarefree power.

    The verdict is the conjunction of the two condition checks; the linear
    quotients route (and, when requested, the Betti engine) must agree.
    """
    c = neighborhood_facets(t)
    w1 = check_c1(t, c)
    w2 = check_c2(t, c)
    og = order_ell(t, c=c)
    lq = has_linear_quotients(ell_ordered_generators(t, og))
    verdict = w1 is None and w2 is None
    betti_cwl = None
    if include_betti:
        from .betti import is_componentwise_linear
        from .ideals import sqfree_power_matchings

        power = sqfree_power_matchings(t, og.nu, c)
        betti_cwl = is_componentwise_linear(power, field=field)
    agreement = lq.ok == verdict and (betti_cwl is None or betti_cwl == verdict)
    return CwlReport(w1, w2, lq, verdict, og, betti_cwl, agreement)
