"""Generators for the concrete graph families used throughout the package:
band graphs, stars, join families, complete graphs minus a matching, the
10-vertex square-root fixture, and assorted standard graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .graph import Graph, join

VARIANTS = ("A", "star", "join", "join+u", "KminusM")


@dataclass(frozen=True)
class FamilySpec:
    """A named family member: variant tag plus integer parameters.

    Variants (matching the CLI ``--family`` grammar):
      A:<k>            band graph of order k
      star:<t>         star with t >= 2 leaves
      join:<k1>,...    join of band graphs of the listed orders
      join:<...>+u     the same plus one universal vertex (variant "join+u")
      KminusM:<n>      complete graph minus a maximal matching
    """

    variant: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown family variant {self.variant!r}")
        p = self.params
        if self.variant == "A":
            if len(p) != 1 or p[0] < 1:
                raise ValueError("band graph order must be a single integer >= 1")
        elif self.variant == "star":
            if len(p) != 1 or p[0] < 2:
                raise ValueError("star leaf count must be a single integer >= 2")
        elif self.variant in ("join", "join+u"):
            if not p or any(k < 1 for k in p):
                raise ValueError("join factor list must be non-empty with entries >= 1")
        elif self.variant == "KminusM":
            if len(p) != 1 or p[0] < 2:
                raise ValueError("complete-minus-matching order must be >= 2")

    def spec_string(self) -> str:
        if self.variant == "join":
            return "join:" + ",".join(map(str, self.params))
        if self.variant == "join+u":
            return "join:" + ",".join(map(str, self.params)) + "+u"
        return f"{self.variant}:{self.params[0]}"


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the CLI mini-grammar, e.g. 'A:3', 'star:4', 'join:1,2+u', 'KminusM:6'."""
    head, sep, tail = text.partition(":")
    if not sep or not tail:
        raise ValueError(f"malformed family spec {text!r}")
    if head in ("A", "star", "KminusM"):
        return FamilySpec(head, (int(tail),))
    if head == "join":
        variant = "join"
        if tail.endswith("+u"):
            variant = "join+u"
            tail = tail[:-2]
        ks = tuple(int(tok) for tok in tail.split(","))
        return FamilySpec(variant, ks)
    raise ValueError(f"unknown family variant {head!r}")


def band_graph(k: int) -> Graph:
    """The graph on 2k vertices with i ~ j exactly when |i - j| <= k - 1.

    Equals the (k-1)-th power of the path on 2k vertices for k >= 2; at
    k = 1 it is two isolated vertices.  Twin-free for every k.
    """
    if k < 1:
        raise ValueError("band graph order must be >= 1")
    n = 2 * k
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, min(i + k, n))])


def star_graph(t: int) -> Graph:
    """Star with center 0 and t leaves 1..t."""
    if t < 1:
        raise ValueError("star needs at least one leaf")
    return Graph(t + 1, [(0, i) for i in range(1, t + 1)])


def join_family(ks: list[int] | tuple[int, ...]) -> Graph:
    """Join of band graphs, blocks concatenated in list order."""
    if not ks:
        raise ValueError("join factor list must be non-empty")
    return reduce(join, (band_graph(k) for k in ks))


def join_family_plus_universal(ks: list[int] | tuple[int, ...]) -> Graph:
    """Join family with one universal vertex appended last."""
    return join(join_family(ks), Graph(1))


def complete_minus_matching(n: int) -> Graph:
    """Complete graph on n vertices minus a maximal matching.

    Even n: the join of n/2 two-vertex independent blocks, i.e. the matching
    removed is {0,1}, {2,3}, ...  Odd n: the even construction on n - 1
    vertices plus a universal vertex (the vertex left unmatched), which is
    isomorphic to deleting a near-perfect matching from the complete graph.
    """
    if n < 2:
        raise ValueError("complete-minus-matching needs n >= 2")
    if n % 2 == 0:
        return join_family([1] * (n // 2))
    return join_family_plus_universal([1] * ((n - 1) // 2))


def make_family(spec: FamilySpec) -> Graph:
    if spec.variant == "A":
        return band_graph(spec.params[0])
    if spec.variant == "star":
        return star_graph(spec.params[0])
    if spec.variant == "join":
        return join_family(spec.params)
    if spec.variant == "join+u":
        return join_family_plus_universal(spec.params)
    return complete_minus_matching(spec.params[0])


def band5_square_root() -> Graph:
    """A sparse second root of band_graph(5).

    Ten path vertices plus seven chords; its square equals band_graph(5)
    under the identity labeling, yet the chord between vertices 1 and 4
    (distance 3 along the path) shows it is not a subgraph of the square
    of the path.
    """
    path = [(i, i + 1) for i in range(9)]
    chords = [(0, 2), (1, 4), (2, 4), (3, 6), (5, 7), (5, 8), (7, 9)]
    return Graph(10, path + chords)


# -- assorted standard graphs (mostly for tests and the CLI) -------------


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)
