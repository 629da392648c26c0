"""Verification of dominating / separating / identifying / locating-dominating
codes at any radius, plus the bipartite membership-graph view that connects
separating sets to discriminating codes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, _ball_mask, _bit_indices

KINDS = ("dominating", "separating", "identifying", "locating-dominating", "discriminating")


@dataclass(frozen=True)
class CodeCertificate:
    """Verdict of a code check.

    Exactly one of the witness fields is set when ``valid`` is False:
    ``witness_vertex`` for an undominated vertex, ``witness_pair`` (with the
    shared restricted ball in ``witness_signature``) for an unseparated pair.
    Witnesses are deterministic: the least undominated vertex, else the
    lexicographically first failing pair.  Domination failures take
    precedence over separation failures.
    """

    kind: str
    radius: int
    valid: bool
    witness_vertex: int | None = None
    witness_pair: tuple[int, int] | None = None
    witness_signature: frozenset[int] | None = None

    def to_dict(self) -> dict:
        if self.valid:
            witness = None
        elif self.witness_vertex is not None:
            witness = {"undominated": self.witness_vertex}
        else:
            witness = {
                "pair": list(self.witness_pair),
                "signature": sorted(self.witness_signature),
            }
        return {
            "kind": self.kind,
            "radius": self.radius,
            "valid": self.valid,
            "witness": witness,
        }


def _code_mask(g: Graph, code: Iterable[int]) -> int:
    m = 0
    for v in code:
        g._check_vertex(v)
        m |= 1 << v
    return m


def _check_radius(radius: int) -> None:
    # code definitions start at radius 1; 0 is rejected on purpose
    if radius < 1:
        raise ValueError("radius must be >= 1 for code checks")


def _balls(g: Graph, radius: int) -> list[int]:
    if radius == 1:
        return list(g._cn)
    return [_ball_mask(g._cn, x, radius) for x in range(g.n)]


def _first_equal_signature_pair(
    sigs: list[int], vertices: Iterable[int]
) -> tuple[int, int] | None:
    """Lexicographically first pair of listed vertices with equal signatures."""
    groups: dict[int, list[int]] = {}
    for v in vertices:
        groups.setdefault(sigs[v], []).append(v)
    best: tuple[int, int] | None = None
    for vs in groups.values():
        if len(vs) > 1 and (best is None or vs[0] < best[0]):
            best = (vs[0], vs[1])
    return best


def is_dominating(g: Graph, code: Iterable[int], radius: int = 1) -> CodeCertificate:
    """Valid iff every radius-r ball meets the code."""
    _check_radius(radius)
    c = _code_mask(g, code)
    for x, b in enumerate(_balls(g, radius)):
        if not b & c:
            return CodeCertificate("dominating", radius, False, witness_vertex=x)
    return CodeCertificate("dominating", radius, True)


def separates(g: Graph, code: Iterable[int], x: int, y: int, radius: int = 1) -> bool:
    """True iff the code-restricted radius-r balls of x and y differ."""
    _check_radius(radius)
    if x == y:
        raise ValueError("invalid pair: the two vertices must be distinct")
    g._check_vertex(x)
    g._check_vertex(y)
    c = _code_mask(g, code)
    return (_ball_mask(g._cn, x, radius) & c) != (_ball_mask(g._cn, y, radius) & c)


def is_separating(g: Graph, code: Iterable[int], radius: int = 1) -> CodeCertificate:
    """Valid iff all vertex pairs get distinct code-restricted balls."""
    _check_radius(radius)
    c = _code_mask(g, code)
    sigs = [b & c for b in _balls(g, radius)]
    pair = _first_equal_signature_pair(sigs, range(g.n))
    if pair is None:
        return CodeCertificate("separating", radius, True)
    return CodeCertificate(
        "separating",
        radius,
        False,
        witness_pair=pair,
        witness_signature=frozenset(_bit_indices(sigs[pair[0]])),
    )


def is_identifying(g: Graph, code: Iterable[int], radius: int = 1) -> CodeCertificate:
    """Valid iff the code is both r-dominating and r-separating."""
    _check_radius(radius)
    c = _code_mask(g, code)
    sigs = [b & c for b in _balls(g, radius)]
    for x, s in enumerate(sigs):
        if not s:
            return CodeCertificate("identifying", radius, False, witness_vertex=x)
    pair = _first_equal_signature_pair(sigs, range(g.n))
    if pair is None:
        return CodeCertificate("identifying", radius, True)
    return CodeCertificate(
        "identifying",
        radius,
        False,
        witness_pair=pair,
        witness_signature=frozenset(_bit_indices(sigs[pair[0]])),
    )


def is_locating_dominating(g: Graph, code: Iterable[int], radius: int = 1) -> CodeCertificate:
    """Valid iff the code dominates and separates all pairs outside the code."""
    _check_radius(radius)
    c = _code_mask(g, code)
    sigs = [b & c for b in _balls(g, radius)]
    for x, s in enumerate(sigs):
        if not s:
            return CodeCertificate("locating-dominating", radius, False, witness_vertex=x)
    outside = [v for v in range(g.n) if not c >> v & 1]
    pair = _first_equal_signature_pair(sigs, outside)
    if pair is None:
        return CodeCertificate("locating-dominating", radius, True)
    return CodeCertificate(
        "locating-dominating",
        radius,
        False,
        witness_pair=pair,
        witness_signature=frozenset(_bit_indices(sigs[pair[0]])),
    )


def check_code(g: Graph, code: Iterable[int], kind: str, radius: int = 1) -> CodeCertificate:
    """Dispatch by kind name (the CLI entry point)."""
    checkers = {
        "dominating": is_dominating,
        "separating": is_separating,
        "identifying": is_identifying,
        "locating-dominating": is_locating_dominating,
    }
    if kind not in checkers:
        raise ValueError(f"unknown code kind {kind!r}; expected one of {sorted(checkers)}")
    return checkers[kind](g, code, radius)


# -- membership graph and discriminating codes --------------------------


@dataclass(frozen=True)
class BipartiteMembershipGraph:
    """Bipartite view of a graph's unit balls.

    One side has the n source vertices, the other one node per closed ball
    B_1(v) (labeled by v); vertex u is joined to the ball node of v exactly
    when u lies in B_1(v).
    """

    balls: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.balls)

    def i_side(self) -> range:
        return range(self.n)

    def a_side(self) -> range:
        return range(self.n)


def membership_graph(g: Graph) -> BipartiteMembershipGraph:
    return BipartiteMembershipGraph(
        tuple(frozenset(_bit_indices(m)) for m in g._cn)
    )


def is_discriminating(
    bg: BipartiteMembershipGraph, chosen: Iterable[int]
) -> CodeCertificate:
    """Valid iff all source vertices get distinct neighborhoods in ``chosen``.

    ``chosen`` lists ball-node labels.  The witness signature, when present,
    holds ball-node labels rather than source vertices.
    """
    picked = sorted(set(chosen))
    for v in picked:
        if not (0 <= v < bg.n):
            raise ValueError(f"invalid ball node {v}: range is 0..{bg.n - 1}")
    sigs: list[frozenset[int]] = [
        frozenset(v for v in picked if u in bg.balls[v]) for u in range(bg.n)
    ]
    groups: dict[frozenset[int], list[int]] = {}
    for u, s in enumerate(sigs):
        groups.setdefault(s, []).append(u)
    best: tuple[int, int] | None = None
    for us in groups.values():
        if len(us) > 1 and (best is None or us[0] < best[0]):
            best = (us[0], us[1])
    if best is None:
        return CodeCertificate("discriminating", 1, True)
    return CodeCertificate(
        "discriminating", 1, False, witness_pair=best, witness_signature=sigs[best[0]]
    )
