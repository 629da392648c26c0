"""Structural recognition of the connected graphs whose minimum identifying
code needs all but one vertex: stars, joins of band graphs, and joins of
band graphs with one universal vertex."""

from __future__ import annotations

from dataclasses import dataclass, field

from .families import FamilySpec, band_graph, make_family
from .graph import (
    Graph,
    PreconditionError,
    TwinsError,
    _bit_indices,
    complement,
    connected_component_masks,
    find_isomorphism,
    induced_subgraph,
    is_connected,
    twin_pairs,
)

STAR = "star"
JOIN_FAMILY = "join-family"
JOIN_FAMILY_UNIVERSAL = "join-family-universal"
NOT_EXTREMAL = "not-extremal"


@dataclass(frozen=True)
class ClassificationResult:
    """Outcome of the extremal recognizer.

    Extremal outcomes imply the minimum identifying code has size n - 1.
    ``factors`` holds the band-graph orders sorted ascending for the two
    join-family outcomes; ``star_t`` the leaf count for stars.
    """

    outcome: str
    star_t: int | None = None
    factors: tuple[int, ...] = ()
    implied_gamma_id: int | None = None

    @property
    def is_extremal(self) -> bool:
        return self.outcome != NOT_EXTREMAL

    def family_spec(self) -> FamilySpec | None:
        """Spec reconstructing a graph isomorphic to the classified input."""
        if self.outcome == STAR:
            return FamilySpec("star", (self.star_t,))
        if self.outcome == JOIN_FAMILY:
            return FamilySpec("join", self.factors)
        if self.outcome == JOIN_FAMILY_UNIVERSAL:
            return FamilySpec("join+u", self.factors)
        return None

    def to_dict(self) -> dict:
        spec = self.family_spec()
        return {
            "outcome": self.outcome,
            "star_t": self.star_t,
            "factors": list(self.factors),
            "implied_gamma_id": self.implied_gamma_id,
            "family_spec": spec.spec_string() if spec else None,
        }


def recognize_band_graph(g: Graph) -> int | None:
    """Return k when g is isomorphic to band_graph(k), else None.

    In a band graph the two endpoints have the unique minimum degree k - 1
    and each of its neighbors has a distinct degree, so the natural vertex
    order can be rebuilt from either endpoint: the endpoint, its neighbors
    by ascending degree, then the rest by descending degree.  Both endpoint
    choices are tried and the band edge rule verified exactly; a full
    isomorphism search remains as a safety net.
    """
    n = g.n
    if n == 0 or n % 2:
        return None
    k = n // 2
    degs = g.degrees()
    if sorted(degs) != sorted(list(range(k - 1, 2 * k - 1)) * 2):
        return None
    endpoints = [v for v in range(n) if degs[v] == k - 1]
    for x1 in endpoints:
        nbrs = sorted(g.neighbors(x1), key=lambda v: (degs[v], v))
        others = sorted(
            (v for v in range(n) if v != x1 and not g.has_edge(x1, v)),
            key=lambda v: (-degs[v], v),
        )
        order = [x1] + nbrs + others
        if len(order) != n:
            continue
        if _matches_band_rule(g, order, k):
            return k
    if find_isomorphism(g, band_graph(k)) is not None:  # pragma: no cover - safety net
        return k
    return None


def _matches_band_rule(g: Graph, order: list[int], k: int) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    if len(pos) != g.n:
        return False
    for i, u in enumerate(order):
        for j in range(i + 1, g.n):
            if g.has_edge(u, order[j]) != (j - i <= k - 1):
                return False
    return True


def classify_extremal(g: Graph) -> ClassificationResult:
    """Decide whether a connected twin-free graph needs n - 1 code vertices.

    Stars are detected first (the two-leaf star is also a join-family
    member; the star outcome wins for it).  Everything else is decomposed
    through the complement: join factors of g are exactly the connected
    components of the complement, so g belongs to the join family iff each
    component induces a band graph in g, with at most one single-vertex
    component playing the universal-vertex role.
    """
    if g.n < 2:
        raise PreconditionError("classification needs at least 2 vertices")
    if not is_connected(g):
        raise PreconditionError("classification is defined for connected graphs only")
    twins = twin_pairs(g)
    if twins:
        raise TwinsError(
            f"vertices {twins[0][0]} and {twins[0][1]} are twins; no identifying code exists",
            twins[0],
        )
    n = g.n
    degs = g.degrees()
    if n >= 3 and sorted(degs) == [1] * (n - 1) + [n - 1]:
        return ClassificationResult(STAR, star_t=n - 1, implied_gamma_id=n - 1)

    comps = connected_component_masks(complement(g))
    factors: list[int] = []
    universal_seen = 0
    for comp in comps:
        members = _bit_indices(comp)
        if len(members) == 1:
            universal_seen += 1
            continue
        k = recognize_band_graph(induced_subgraph(g, members))
        if k is None:
            return ClassificationResult(NOT_EXTREMAL)
        factors.append(k)
    # two universal vertices would be twins, excluded above
    assert universal_seen <= 1, "twin-free graph cannot have two universal vertices"
    if not factors:
        return ClassificationResult(NOT_EXTREMAL)
    factors.sort()
    if universal_seen:
        return ClassificationResult(
            JOIN_FAMILY_UNIVERSAL, factors=tuple(factors), implied_gamma_id=n - 1
        )
    # a single order-1 factor alone would be the disconnected two-vertex
    # graph, already rejected by the connectivity precondition
    assert factors != [1]
    return ClassificationResult(JOIN_FAMILY, factors=tuple(factors), implied_gamma_id=n - 1)


def reconstruct(result: ClassificationResult) -> Graph | None:
    """Build a graph isomorphic to the classified input, if extremal."""
    spec = result.family_spec()
    return make_family(spec) if spec else None
