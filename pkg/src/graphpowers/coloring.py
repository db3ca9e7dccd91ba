"""Red/blue edge coloring and the B/R/S vertex partition behind the cube bound.

An edge ``uv`` of a ``d``-regular graph is red when ``u`` and ``v`` share
more than ``2d/3`` neighbours, blue otherwise. ``B`` holds vertices touching
a blue edge, ``R`` the remaining vertices adjacent to ``B``, ``S`` the rest.
All threshold comparisons are made with the denominator cleared.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .graph import Graph, _bfs, diameter, is_connected, regularity, UNREACHABLE


class Color(str, enum.Enum):
    RED = "red"
    BLUE = "blue"


class NotRegularError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColoring:
    graph: Graph
    degree: int
    colors: dict = field(compare=False)  # (u, v) with u < v -> Color

    @property
    def threshold(self) -> Fraction:
        return Fraction(2 * self.degree, 3)

    def color(self, u: int, v: int) -> Color:
        return self.colors[(u, v) if u < v else (v, u)]

    def blue_edges(self) -> list[tuple[int, int]]:
        return [e for e, c in self.colors.items() if c is Color.BLUE]


@dataclass(frozen=True)
class BrsPartition:
    B: frozenset
    R: frozenset
    S: frozenset

    def membership(self, n: int) -> list[str]:
        return ["B" if v in self.B else "R" if v in self.R else "S" for v in range(n)]


def color_edges(G: Graph) -> EdgeColoring:
    d = regularity(G)
    if d is None:
        raise NotRegularError("edge coloring is defined for regular graphs only")
    nbrs = G.neighbor_sets()
    colors = {}
    for u, v in G.edges():
        common = len(nbrs[u] & nbrs[v])
        colors[(u, v)] = Color.RED if 3 * common > 2 * d else Color.BLUE
    return EdgeColoring(G, d, colors)


def partition_brs(G: Graph, C: EdgeColoring) -> BrsPartition:
    if C.graph != G:
        raise ValueError("coloring was computed for a different graph")
    B = {x for e in C.blue_edges() for x in e}
    R = {v for v in range(G.n) if v not in B and any(w in B for w in G.adj[v])}
    S = set(range(G.n)) - B - R
    return BrsPartition(frozenset(B), frozenset(R), frozenset(S))


def has_blue_edge(G: Graph) -> bool:
    return bool(color_edges(G).blue_edges())


def _standing_assumptions(G: Graph) -> Optional[str]:
    """Reason the partition argument does not apply, or ``None`` if it does."""
    d = regularity(G)
    if d is None:
        return "graph is not regular"
    if not is_connected(G):
        return "graph is disconnected"
    diam = diameter(G)
    if diam < 3:
        return f"diam={diam} < 3"
    if d <= 6:
        return f"degree {d} <= 6"
    return None


@dataclass(frozen=True)
class WithinTwoReport:
    applicable: bool
    reason: str
    nearest_b: tuple  # per-vertex distance to B, UNREACHABLE when B is empty

    @property
    def holds(self) -> bool:
        return all(x is not UNREACHABLE and x <= 2 for x in self.nearest_b)


def _distance_to_set(G: Graph, targets) -> list:
    # multi-source BFS from a virtual root joined to every target
    n = G.n
    rows = list(G.adj) + [tuple(sorted(targets))]
    dist = _bfs(rows, n + 1, n)
    return [x if x is UNREACHABLE else x - 1 for x in dist[:n]]


def check_b_within_two(G: Graph, P: BrsPartition) -> WithinTwoReport:
    """Every vertex lies within distance 2 of ``B``."""
    reason = _standing_assumptions(G)
    nearest = tuple(_distance_to_set(G, P.B))
    return WithinTwoReport(reason is None, reason or "applies", nearest)


@dataclass(frozen=True)
class PartitionReport:
    applicable: bool
    reason: str
    clauses: dict  # name -> bool

    @property
    def holds(self) -> bool:
        return all(self.clauses.values())


def check_partition_inequalities(G: Graph, C: EdgeColoring, P: BrsPartition) -> PartitionReport:
    """Clauses on the partition:

    * ``r_to_s_at_most_third``: ``3 |N(x) ∩ S| <= d`` for every ``x`` in ``R``
    * ``s_to_r_above_third``: ``3 |N(s) ∩ R| > d`` for every ``s`` in ``S``
    * ``s_at_most_r``: ``|S| <= |R|``
    * ``br_at_least_half``: ``2 |B ∪ R| >= n``
    """
    if C.graph != G:
        raise ValueError("coloring was computed for a different graph")
    reason = _standing_assumptions(G)
    d = C.degree
    nbrs = G.neighbor_sets()
    clauses = {
        "r_to_s_at_most_third": all(3 * len(nbrs[x] & P.S) <= d for x in P.R),
        "s_to_r_above_third": all(3 * len(nbrs[s] & P.R) > d for s in P.S),
        "s_at_most_r": len(P.S) <= len(P.R),
        "br_at_least_half": 2 * (len(P.B) + len(P.R)) >= G.n,
    }
    return PartitionReport(reason is None, reason or "applies", clauses)


def blue_neighborhood_bound(G: Graph, C: EdgeColoring, u: int) -> int:
    """Largest ``|N(u) ∪ N(v)| - 1`` over blue edges ``uv``.

    This many vertices sit within distance 2 of ``u``; it is at least
    ``4d/3 - 1`` and never exceeds the degree of ``u`` in ``G^2``.
    """
    nbrs = G.neighbor_sets()
    blue = [v for v in G.adj[u] if C.color(u, v) is Color.BLUE]
    if not blue:
        raise ValueError(f"vertex {u} has no blue edge")
    value = max(len(nbrs[u] | nbrs[v]) - 1 for v in blue)
    if 3 * (value + 1) < 4 * C.degree:
        raise AssertionError(f"blue edge at {u} gives {value} < 4d/3 - 1")
    square_degree = sum(1 for x in _bfs(G.adj, G.n, u, limit=2) if x is not UNREACHABLE) - 1
    if square_degree < value:
        raise AssertionError(f"G^2 degree {square_degree} of {u} below certified {value}")
    return value
