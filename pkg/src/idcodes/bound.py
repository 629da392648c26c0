"""Constructive upper bounds on minimum identifying codes: the removable
vertex finder, greedy distance-d independent sets, the code-from-independent-
set composition, and the degree-based pipelines with exact rational bound
values."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import codes
from .graph import (
    Graph,
    PreconditionError,
    _ball_mask,
    _bit_indices,
    is_connected,
    power,
)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one constructive bound run.

    ``code`` = all vertices minus ``mapped_set`` and verifies as a valid
    r-identifying code; ``bound_value`` is the exact rational ceiling from
    the degree formula, absent when the maximum degree is below 3.
    """

    theorem: str
    radius: int
    independent_set: frozenset[int]
    mapped_set: frozenset[int]
    code: frozenset[int]
    bound_value: Fraction | None

    def bound_ceiling(self) -> int | None:
        return None if self.bound_value is None else math.ceil(self.bound_value)

    def to_dict(self) -> dict:
        bv = self.bound_value
        return {
            "theorem": self.theorem,
            "radius": self.radius,
            "independent_set": sorted(self.independent_set),
            "mapped_set": sorted(self.mapped_set),
            "code": sorted(self.code),
            "code_size": len(self.code),
            "bound_value": None if bv is None else [bv.numerator, bv.denominator],
            "bound_ceiling": self.bound_ceiling(),
        }


def ball_size_limit(max_degree: int, radius: int) -> int:
    """Largest possible ball size in a graph of the given maximum degree.

    Computed as the explicit sum 1 + D * sum_{j<radius} (D-1)^j, which stays
    defined at D = 2 where the usual closed form divides by zero.
    """
    if max_degree < 0 or radius < 0:
        raise ValueError("arguments must be non-negative")
    total = 1
    layer = max_degree
    for _ in range(radius):
        total += layer
        layer *= max(max_degree - 1, 0)
    return total


def _twin_free_without(balls: list[int], n: int, y: int) -> bool:
    clear = ~(1 << y)
    acc = set()
    for u in range(n):
        if u == y:
            continue
        s = balls[u] & clear
        if s in acc:
            return False
        acc.add(s)
    return True


def _least_removable(balls: list[int], n: int, ball_of_x: int) -> int | None:
    m = ball_of_x
    while m:
        b = m & -m
        m ^= b
        y = b.bit_length() - 1
        if _twin_free_without(balls, n, y):
            return y
    return None


def removable_vertex_in_ball(g: Graph, x: int, radius: int = 1) -> int:
    """Least y within distance r of x whose removal from the r-th power
    leaves it twin-free.

    Such a vertex exists in every finite graph whose r-th power is
    twin-free.
    """
    g._check_vertex(x)
    balls = [_ball_mask(g._cn, v, radius) for v in range(g.n)]
    if len(set(balls)) != g.n:
        raise PreconditionError(
            f"the radius-{radius} power has twins; no identifying code exists"
        )
    y = _least_removable(balls, g.n, balls[x])
    if y is None:  # pragma: no cover - impossible for finite twin-free powers
        raise RuntimeError(f"no removable vertex found in the ball of {x}")
    return y


def greedy_independent_set(g: Graph, min_distance: int) -> frozenset[int]:
    """Maximal set with pairwise distance >= min_distance, greedy by index."""
    if min_distance < 1:
        raise ValueError("minimum distance must be >= 1")
    chosen: list[int] = []
    forbidden = 0
    for v in range(g.n):
        if not forbidden >> v & 1:
            chosen.append(v)
            forbidden |= _ball_mask(g._cn, v, min_distance - 1)
    return frozenset(chosen)


def code_from_independent_set(
    g: Graph, chosen: Iterable[int], radius: int = 1
) -> frozenset[int]:
    """All vertices minus a (3r+1)-independent set of individually removable
    vertices, verified as an r-identifying code before returning.

    Preconditions checked: the set is (3r+1)-independent (equivalently
    4-independent in the r-th power) and every member v leaves the full
    vertex set minus v a valid r-identifying code.
    """
    members = sorted(set(chosen))
    for v in members:
        g._check_vertex(v)
    spread = 3 * radius + 1
    for i, u in enumerate(members):
        reach = _ball_mask(g._cn, u, spread - 1)
        for v in members[i + 1 :]:
            if reach >> v & 1:
                raise PreconditionError(
                    f"vertices {u} and {v} are closer than {spread}; "
                    f"the set is not {spread}-independent"
                )
    everything = set(range(g.n))
    for v in members:
        cert = codes.is_identifying(g, everything - {v}, radius)
        if not cert.valid:
            err = PreconditionError(
                f"removing vertex {v} alone does not leave an identifying code: "
                f"{cert.to_dict()['witness']}"
            )
            err.certificate = cert
            raise err
    result = frozenset(everything - set(members))
    final = codes.is_identifying(g, result, radius)
    if not final.valid:
        err = PreconditionError(
            f"the complement of the set fails to identify: {final.to_dict()['witness']}"
        )
        err.certificate = final
        raise err
    return result


def _degree_bound(n: int, delta: int, radius: int) -> Fraction | None:
    if delta < 3:
        return None
    return n * (1 - Fraction(delta - 2, delta * (delta - 1) ** (5 * radius) - 2))


def constructive_upper_bound(g: Graph, radius: int = 1) -> BoundReport:
    """Greedy (5r+1)-independent set, one removable vertex inside each ball,
    and the complement of the mapped set as the resulting code."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    if g.n < 2:
        raise PreconditionError("the pipeline needs at least 2 vertices")
    if not is_connected(g):
        raise PreconditionError("the pipeline is defined for connected graphs")
    balls = [_ball_mask(g._cn, v, radius) for v in range(g.n)]
    if len(set(balls)) != g.n:
        raise PreconditionError(
            f"the radius-{radius} power has twins; no identifying code exists"
        )
    independent = greedy_independent_set(g, 5 * radius + 1)
    mapped = []
    for x in sorted(independent):
        y = _least_removable(balls, g.n, balls[x])
        if y is None:  # pragma: no cover
            raise RuntimeError(f"no removable vertex in the ball of {x}")
        mapped.append(y)
    # each image sits within distance r of its preimage, so images of a
    # (5r+1)-independent set stay (3r+1)-independent and distinct
    assert len(set(mapped)) == len(mapped), "mapped set lost injectivity"
    code = code_from_independent_set(g, mapped, radius)
    theorem = "thm14" if radius == 1 else "thm19"
    return BoundReport(
        theorem,
        radius,
        independent,
        frozenset(mapped),
        code,
        _degree_bound(g.n, g.max_degree(), radius),
    )


def regular_constructive_bound(g: Graph) -> BoundReport:
    """Regular-graph variant: the greedy 4-independent set itself is removed.

    In a regular twin-free graph every single-vertex deletion keeps the
    graph identifiable, so no removable-vertex mapping step is needed and
    the denominator improves to 1 + D - D^2 + D^3.
    """
    if g.n < 2:
        raise PreconditionError("the pipeline needs at least 2 vertices")
    if not is_connected(g):
        raise PreconditionError("the pipeline is defined for connected graphs")
    degs = g.degrees()
    if len(set(degs)) != 1:
        raise PreconditionError("this variant needs a regular graph")
    if len(set(g._cn)) != g.n:
        raise PreconditionError("the graph has twins; no identifying code exists")
    delta = degs[0]
    independent = greedy_independent_set(g, 4)
    code = code_from_independent_set(g, independent, 1)
    bound = None
    if delta >= 3:
        bound = g.n * (1 - Fraction(1, 1 + delta - delta * delta + delta**3))
    return BoundReport("thm15", 1, independent, independent, code, bound)


def conjecture_scan(max_n: int, force: bool = False):
    """Exhaustively test the conjectured ceil(n - n/D) ceiling for D >= 3."""
    from .scans import scan_conjectured_degree_bound

    return scan_conjectured_degree_bound(max_n, force=force)
