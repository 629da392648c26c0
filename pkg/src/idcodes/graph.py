"""Finite simple graphs on dense 0-based vertices, with bitmask adjacency.

Adjacency is stored as one integer bitmask per vertex, which makes balls,
symmetric differences and twin detection word-parallel; the exhaustive
scans in this package spend nearly all their time in these operations.
Graphs are immutable after construction and safe to share.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Iterator

ENUMERATION_CAP = 7
CANONICAL_CAP = 8
ISOMORPHISM_CAP = 12


class PreconditionError(ValueError):
    """A structural precondition of an operation does not hold."""


class TwinsError(PreconditionError):
    """The graph (or the relevant power) has a pair of twin vertices."""

    def __init__(self, message: str, pair: tuple[int, int]):
        super().__init__(message)
        self.pair = pair


def _bit_indices(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``_nbr[v]`` is the open-neighborhood bitmask of v, ``_cn[v]`` the closed
    one (v included).  Other modules in this package read the mask tuples
    directly in hot loops.
    """

    __slots__ = ("n", "_nbr", "_cn")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbr = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"invalid vertex in edge ({u}, {v}): range is 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop edge ({u}, {u}) not allowed in a simple graph")
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        self.n = n
        self._nbr = tuple(nbr)
        self._cn = tuple(m | (1 << v) for v, m in enumerate(nbr))

    @classmethod
    def _from_masks(cls, n: int, nbr: tuple[int, ...]) -> "Graph":
        """Internal fast path; masks must already be symmetric and loop-free."""
        g = object.__new__(cls)
        g.n = n
        g._nbr = nbr
        g._cn = tuple(m | (1 << v) for v, m in enumerate(nbr))
        return g

    # -- basic accessors ------------------------------------------------

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return _bit_indices(self._nbr[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._nbr[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self._nbr]

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self._nbr), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._nbr[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        out = []
        for u in range(self.n):
            rest = self._nbr[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._nbr) // 2

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"invalid vertex {v}: range is 0..{self.n - 1}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._nbr == other._nbr

    def __hash__(self) -> int:
        return hash((self.n, self._nbr))

    def __repr__(self) -> str:
        es = self.edges()
        shown = ", ".join(map(str, es[:8])) + (", ..." if len(es) > 8 else "")
        return f"Graph(n={self.n}, m={len(es)}, edges=[{shown}])"


# -- balls, powers, twins ----------------------------------------------


def _ball_mask(cn: tuple[int, ...] | list[int], x: int, r: int) -> int:
    """Bitmask of the closed ball of radius r around x (BFS over masks)."""
    seen = 1 << x
    frontier = seen
    for _ in range(r):
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= cn[b.bit_length() - 1]
        nxt &= ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
    return seen


def closed_ball(g: Graph, x: int, r: int) -> frozenset[int]:
    """Vertices at distance at most r from x; always contains x.

    r = 0 is accepted as a degenerate convenience and gives {x}.
    """
    g._check_vertex(x)
    if r < 0:
        raise ValueError("radius must be >= 0")
    return frozenset(_bit_indices(_ball_mask(g._cn, x, r)))


def ball_symmetric_difference(g: Graph, x: int, y: int, r: int) -> frozenset[int]:
    """Symmetric difference of the radius-r balls around x and y."""
    if x == y:
        raise ValueError("invalid pair: the two vertices must be distinct")
    g._check_vertex(x)
    g._check_vertex(y)
    if r < 0:
        raise ValueError("radius must be >= 0")
    return frozenset(_bit_indices(_ball_mask(g._cn, x, r) ^ _ball_mask(g._cn, y, r)))


def power(g: Graph, r: int) -> Graph:
    """Graph on the same vertices joining every pair at distance 1..r."""
    if r < 1:
        raise ValueError("radius must be >= 1")
    if r == 1:
        return g
    nbr = tuple(_ball_mask(g._cn, x, r) ^ (1 << x) for x in range(g.n))
    return Graph._from_masks(g.n, nbr)


def distances_from(g: Graph, x: int) -> list[int | None]:
    """BFS distances from x; None for vertices in other components."""
    g._check_vertex(x)
    dist: list[int | None] = [None] * g.n
    dist[x] = 0
    seen = 1 << x
    frontier = seen
    d = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= g._cn[b.bit_length() - 1]
        nxt &= ~seen
        d += 1
        for v in _bit_indices(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def twin_pairs(g: Graph) -> list[tuple[int, int]]:
    """All unordered pairs with identical closed neighborhoods."""
    groups: dict[int, list[int]] = {}
    for v, m in enumerate(g._cn):
        groups.setdefault(m, []).append(v)
    pairs: list[tuple[int, int]] = []
    for vs in groups.values():
        if len(vs) > 1:
            pairs.extend(itertools.combinations(vs, 2))
    return sorted(pairs)


def is_twin_free(g: Graph) -> bool:
    return len(set(g._cn)) == g.n


# -- constructions on graphs -------------------------------------------


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts.

    Vertices of g2 are shifted up by g1.n.
    """
    n1, n2 = g1.n, g2.n
    low = (1 << n1) - 1
    high = ((1 << n2) - 1) << n1
    nbr = [g1._nbr[v] | high for v in range(n1)]
    nbr += [(g2._nbr[v] << n1) | low for v in range(n2)]
    return Graph._from_masks(n1 + n2, tuple(nbr))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    nbr = tuple(full & ~g._cn[v] for v in range(g.n))
    return Graph._from_masks(g.n, nbr)


def delete_vertex(g: Graph, x: int) -> tuple[Graph, dict[int, int]]:
    """New graph without x, reindexed densely, plus the old->new index map."""
    g._check_vertex(x)
    keep = [v for v in range(g.n) if v != x]
    mapping = {old: new for new, old in enumerate(keep)}
    nbr = []
    for old in keep:
        m = 0
        rest = g._nbr[old] & ~(1 << x)
        while rest:
            b = rest & -rest
            rest ^= b
            m |= 1 << mapping[b.bit_length() - 1]
        nbr.append(m)
    return Graph._from_masks(g.n - 1, tuple(nbr)), mapping


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph induced by ``keep``; new labels follow sorted old labels."""
    vs = sorted(set(keep))
    for v in vs:
        g._check_vertex(v)
    mapping = {old: new for new, old in enumerate(vs)}
    nbr = []
    for old in vs:
        m = 0
        rest = g._nbr[old]
        while rest:
            b = rest & -rest
            rest ^= b
            w = b.bit_length() - 1
            if w in mapping:
                m |= 1 << mapping[w]
        nbr.append(m)
    return Graph._from_masks(len(vs), tuple(nbr))


def is_connected(g: Graph) -> bool:
    """True for graphs on at most one vertex and for connected graphs."""
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    seen = g._cn[0]
    frontier = seen
    while True:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= g._cn[b.bit_length() - 1]
        nxt &= ~seen
        if not nxt:
            return seen == full
        seen |= nxt
        frontier = nxt


def connected_component_masks(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, ordered by least vertex."""
    out = []
    remaining = (1 << g.n) - 1
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        seen = g._cn[start] & remaining
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= g._cn[b.bit_length() - 1]
            nxt &= remaining & ~seen
            seen |= nxt
            frontier = nxt
        out.append(seen)
        remaining &= ~seen
    return out


# -- enumeration, canonical form, isomorphism --------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def _iter_closed_masks(n: int) -> Iterator[tuple[int, list[int]]]:
    """Gray-code sweep over all labeled graphs on n vertices.

    Yields (edge_mask, cn) where cn is a REUSED list of closed-neighborhood
    masks; callers must copy it if they hold on to it.  Bit e of edge_mask
    corresponds to the e-th pair of ``_pairs(n)``.
    """
    pairs = _pairs(n)
    cn = [1 << v for v in range(n)]
    yield 0, cn
    gray_prev = 0
    for i in range(1, 1 << len(pairs)):
        gray = i ^ (i >> 1)
        e = (gray ^ gray_prev).bit_length() - 1
        gray_prev = gray
        u, v = pairs[e]
        cn[u] ^= 1 << v
        cn[v] ^= 1 << u
        yield gray, cn


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is the bitmask over ``_pairs(n)`` positions."""
    pairs = _pairs(n)
    nbr = [0] * n
    while mask:
        b = mask & -mask
        mask ^= b
        u, v = pairs[b.bit_length() - 1]
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    return Graph._from_masks(n, tuple(nbr))


def edge_mask_of(g: Graph) -> int:
    index = {p: i for i, p in enumerate(_pairs(g.n))}
    m = 0
    for e in g.edges():
        m |= 1 << index[e]
    return m


def enumerate_graphs(
    n: int,
    predicate: Callable[[Graph], bool] | None = None,
    dedup: bool = False,
    cap: int = ENUMERATION_CAP,
) -> Iterator[Graph]:
    """Yield every labeled simple graph on n vertices passing the filter.

    The order is fixed: ascending edge bitmask, where bit e stands for the
    e-th vertex pair in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
    With ``dedup`` only the first representative of each isomorphism class
    (by minimal canonical edge mask) is yielded.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > cap:
        raise ValueError(
            f"refusing to enumerate 2^{n * (n - 1) // 2} labeled graphs on {n} "
            f"vertices (cap is {cap}); pass a larger cap explicitly if intended"
        )
    seen_canonical: set[int] = set()
    for mask in range(1 << (n * (n - 1) // 2)):
        g = graph_from_edge_mask(n, mask)
        if predicate is not None and not predicate(g):
            continue
        if dedup:
            c = canonical_form(g)
            if c in seen_canonical:
                continue
            seen_canonical.add(c)
        yield g


def canonical_form(g: Graph, cap: int = CANONICAL_CAP) -> int:
    """Lexicographically minimal edge bitmask over all vertex relabelings.

    Exact but factorial-time; refused above the cap.
    """
    if g.n > cap:
        raise ValueError(f"canonical form by permutation is limited to n <= {cap}")
    index = {p: i for i, p in enumerate(_pairs(g.n))}
    edges = g.edges()
    best: int | None = None
    for perm in itertools.permutations(range(g.n)):
        m = 0
        for u, v in edges:
            a, b = perm[u], perm[v]
            m |= 1 << index[(a, b) if a < b else (b, a)]
            if best is not None and m > best:
                break
        else:
            if best is None or m < best:
                best = m
    return best if best is not None else 0


def find_isomorphism(g1: Graph, g2: Graph, cap: int = ISOMORPHISM_CAP) -> list[int] | None:
    """Edge-preserving bijection as a list (image of each g1 vertex), or None.

    Backtracking with degree pruning; intended for small graphs and refused
    above the cap.
    """
    if max(g1.n, g2.n) > cap:
        raise ValueError(f"isomorphism search is limited to n <= {cap}")
    n = g1.n
    if n != g2.n or g1.edge_count != g2.edge_count:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    order = sorted(range(n), key=lambda v: (-g1.degree(v), v))
    mapping = [-1] * n
    deg2 = g2.degrees()

    def backtrack(i: int, used: int) -> bool:
        if i == n:
            return True
        u = order[i]
        du = g1._nbr[u].bit_count()
        for w in range(n):
            if used >> w & 1 or deg2[w] != du:
                continue
            ok = True
            for j in range(i):
                a = order[j]
                if (g1._nbr[u] >> a & 1) != (g2._nbr[w] >> mapping[a] & 1):
                    ok = False
                    break
            if ok:
                mapping[u] = w
                if backtrack(i + 1, used | 1 << w):
                    return True
                mapping[u] = -1
        return False

    return list(mapping) if backtrack(0, 0) else None


def is_isomorphic(g1: Graph, g2: Graph, cap: int = ISOMORPHISM_CAP) -> bool:
    return find_isomorphism(g1, g2, cap=cap) is not None


# -- edge-list text format ----------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the text edge-list format.

    First data line is "n m", followed by m lines "u v" with 0-based
    endpoints; '#' starts a comment, blank lines are skipped.
    """
    tokens: list[int] = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        for tok in body.split():
            try:
                tokens.append(int(tok))
            except ValueError:
                raise ValueError(f"invalid token {tok!r} in edge list") from None
    if len(tokens) < 2:
        raise ValueError("edge list must start with a header line 'n m'")
    n, m = tokens[0], tokens[1]
    rest = tokens[2:]
    if len(rest) != 2 * m:
        raise ValueError(f"expected {2 * m} endpoint numbers after the header, got {len(rest)}")
    edges = [(rest[2 * i], rest[2 * i + 1]) for i in range(m)]
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    """Serialize in the text edge-list format; edges sorted with u < v."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
