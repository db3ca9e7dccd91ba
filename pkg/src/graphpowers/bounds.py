"""Exact checks of edge-growth lower bounds for graph powers.

Every verdict is decided with integers and :class:`fractions.Fraction`;
nothing in here uses a floating-point tolerance.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .families import LayeredSpec, layered_h, regularized_h
from .graph import (
    Digraph,
    DisconnectedGraphError,
    Graph,
    _bfs,
    bfs_distances,
    diameter,
    is_connected,
    layers,
    reach_count,
    regularity,
    UNREACHABLE,
)
from .power import power_edge_count

# Weaker cube-growth constant known before the 1/6 improvement; kept for reference.
HEGARTY_EPSILON = 0.087
CUBE_FACTOR = Fraction(7, 6)


class BoundId(str, enum.Enum):
    CAUCHY_DAVENPORT = "cauchy_davenport"
    HIGHER_POWER = "higher_power"
    CUBE_7_6 = "cube_7_6"
    CUBE_CONJECTURE_2E = "cube_conjecture_2e"
    ORIENTED_SQUARE_3_2 = "oriented_square_3_2"
    EULERIAN_SQUARE_2E = "eulerian_square_2e"


CONJECTURES = frozenset({BoundId.CUBE_CONJECTURE_2E, BoundId.EULERIAN_SQUARE_2E})


class Applicability(str, enum.Enum):
    APPLIES = "applies"
    VACUOUS = "vacuous"
    PRECONDITIONS_UNMET = "preconditions_unmet"


@dataclass(frozen=True)
class BoundReport:
    bound_id: BoundId
    r: int
    lhs: int
    rhs: Fraction
    applicability: Applicability
    reason: str = ""
    details: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def slack(self) -> Fraction:
        return self.lhs - self.rhs

    @property
    def satisfied(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def is_conjecture(self) -> bool:
        return self.bound_id in CONJECTURES

    @property
    def violated(self) -> bool:
        """A counterexample: the bound applies and fails."""
        return self.applicability is Applicability.APPLIES and not self.satisfied

    def to_dict(self) -> dict:
        return {
            "bound_id": self.bound_id.value,
            "r": self.r,
            "lhs": self.lhs,
            "rhs_num": self.rhs.numerator,
            "rhs_den": self.rhs.denominator,
            "satisfied": self.satisfied,
            "slack_num": self.slack.numerator,
            "slack_den": self.slack.denominator,
            "applicability": self.applicability.value,
            "reason": self.reason,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def _undirected_status(G: Graph):
    """(degree or None, connected, diameter or None)."""
    connected = G.n > 0 and is_connected(G)
    return regularity(G) if G.n else None, connected, diameter(G) if connected else None


def check_cauchy_davenport(G: Graph, r: int) -> BoundReport:
    """``e(G^r) >= r e(G)`` for circulant graphs of prime order, ``r < diam``.

    The caller vouches that ``G`` is such a Cayley graph; only connectivity
    is enforced here.
    """
    if not is_connected(G):
        raise DisconnectedGraphError("Cauchy-Davenport check needs a connected graph")
    diam = diameter(G)
    lhs = power_edge_count(G, r)
    rhs = Fraction(r * G.m)
    if r < diam:
        app, reason = Applicability.APPLIES, f"r={r} < diam={diam}"
    else:
        app, reason = Applicability.VACUOUS, f"r={r} >= diam={diam}: power is complete"
    return BoundReport(BoundId.CAUCHY_DAVENPORT, r, lhs, rhs, app, reason)


def check_higher_power(G: Graph, r: int) -> BoundReport:
    """``e(G^r) >= (ceil(r/3) - 1) e(G)`` for regular connected ``G``, ``r <= diam``."""
    if r < 1:
        raise ValueError("power must be >= 1")
    d, connected, diam = _undirected_status(G)
    lhs = power_edge_count(G, r)
    rhs = Fraction((ceil(r / 3) - 1) * G.m)
    if d is None:
        app, reason = Applicability.PRECONDITIONS_UNMET, "graph is not regular"
    elif not connected:
        app, reason = Applicability.PRECONDITIONS_UNMET, "graph is disconnected"
    elif r > diam:
        app, reason = Applicability.PRECONDITIONS_UNMET, f"r={r} exceeds diam={diam}"
    else:
        app, reason = Applicability.APPLIES, f"{d}-regular, connected, r={r} <= diam={diam}"
    return BoundReport(BoundId.HIGHER_POWER, r, lhs, rhs, app, reason)


def _cube_report(G: Graph, bound_id: BoundId, factor: Fraction) -> BoundReport:
    d, connected, diam = _undirected_status(G)
    lhs = power_edge_count(G, 3)
    rhs = factor * G.m
    if d is None:
        app, reason = Applicability.PRECONDITIONS_UNMET, "graph is not regular"
    elif not connected:
        app, reason = Applicability.PRECONDITIONS_UNMET, "graph is disconnected"
    elif diam < 3:
        app, reason = Applicability.PRECONDITIONS_UNMET, f"diam={diam} < 3"
    else:
        app, reason = Applicability.APPLIES, f"{d}-regular, connected, diam={diam}"
    return BoundReport(bound_id, 3, lhs, rhs, app, reason)


def check_cube(G: Graph) -> BoundReport:
    """``e(G^3) >= (7/6) e(G)`` for regular connected ``G`` of diameter >= 3."""
    return _cube_report(G, BoundId.CUBE_7_6, CUBE_FACTOR)


def check_cube_conjecture(G: Graph) -> BoundReport:
    """Conjectured ``e(G^3) >= 2 e(G)``; a violation is a finding, not a bug."""
    return _cube_report(G, BoundId.CUBE_CONJECTURE_2E, Fraction(2))


def _second_out_layers(D: Digraph):
    """Per vertex: (|N1_out|, |N2_out|, reaches everything within 2)."""
    rows = []
    for v in range(D.n):
        dist = _bfs(D.out_adj, D.n, v, limit=2)
        n1 = sum(1 for x in dist if x == 1)
        n2 = sum(1 for x in dist if x == 2)
        rows.append((n1, n2, n1 + n2 == D.n - 1))
    return rows


def check_oriented_square(D: Digraph) -> BoundReport:
    """``e(D^2) >= (3/2) e(D)`` for out-regular oriented digraphs.

    ``details["witness"]`` holds one entry per vertex: ``"ok"`` when
    ``2 |N2_out(v)| >= |N1_out(v)|``, ``"saturated"`` when ``v`` already
    reaches all other vertices within two steps, ``"fail"`` otherwise.
    """
    lhs = power_edge_count(D, 2)
    rhs = Fraction(3, 2) * D.m
    out_degrees = {len(row) for row in D.out_adj}
    witness = []
    for n1, n2, saturated in _second_out_layers(D):
        if 2 * n2 >= n1:
            witness.append("ok")
        elif saturated:
            witness.append("saturated")
        else:
            witness.append("fail")
    if not D.is_oriented():
        app, reason = Applicability.PRECONDITIONS_UNMET, "digraph has a pair of opposite arcs"
    elif len(out_degrees) > 1:
        app, reason = Applicability.PRECONDITIONS_UNMET, "digraph is not out-regular"
    else:
        app, reason = Applicability.APPLIES, f"oriented, out-regular of degree {out_degrees.pop()}"
    return BoundReport(
        BoundId.ORIENTED_SQUARE_3_2, 2, lhs, rhs, app, reason, details={"witness": witness}
    )


def check_eulerian_square_conjecture(D: Digraph) -> BoundReport:
    """Conjectured ``e(D^2) >= 2 e(D)`` for Eulerian oriented digraphs."""
    lhs = power_edge_count(D, 2)
    rhs = Fraction(2 * D.m)
    outs = [len(row) for row in D.out_adj]
    if not D.is_oriented():
        app, reason = Applicability.PRECONDITIONS_UNMET, "digraph has a pair of opposite arcs"
    elif outs != D.in_degrees():
        app, reason = Applicability.PRECONDITIONS_UNMET, "in-degree differs from out-degree somewhere"
    elif D.n == 0 or not is_connected(D.underlying()):
        app, reason = Applicability.PRECONDITIONS_UNMET, "underlying graph is disconnected"
    else:
        app, reason = Applicability.APPLIES, "oriented, Eulerian, connected"
    return BoundReport(BoundId.EULERIAN_SQUARE_2E, 2, lhs, rhs, app, reason)


# -- the per-layer reach inequality -------------------------------------------


@dataclass(frozen=True)
class LayerReachRow:
    j: int
    count: int
    degree: int

    @property
    def holds(self) -> bool:
        return self.count >= self.degree


def layer_reach_check(G: Graph, v: int, u: int, r: int) -> list[LayerReachRow]:
    """For each layer index ``j`` with ``dist(u,v) - r < j <= dist(u,v)``, ``j >= 1``,
    count vertices of ``N_{j-1}(v) ∪ N_j(v) ∪ N_{j+1}(v)`` within ``r`` of ``u``.

    In a ``d``-regular connected graph every count is at least ``d``.
    """
    d = regularity(G)
    if d is None:
        raise ValueError("layer reach check needs a regular graph")
    if not is_connected(G):
        raise DisconnectedGraphError("layer reach check needs a connected graph")
    if r < 1:
        raise ValueError("radius must be >= 1")
    dec = layers(G, v)
    duv = bfs_distances(G, v)[u]
    if duv is UNREACHABLE:
        raise DisconnectedGraphError(f"{u} is unreachable from {v}")
    rows = []
    for j in range(max(duv - r + 1, 1), duv + 1):
        rows.append(LayerReachRow(j, reach_count(G, u, dec.union(j - 1, j + 1), r), d))
    return rows


# -- extremal ratio sweep -----------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    d: int
    n: int
    m: int
    power_edges: int
    ratio: Fraction
    limit: int

    def to_csv(self) -> str:
        return (
            f"{self.d},{self.n},{self.m},{self.power_edges},"
            f"{self.ratio.numerator},{self.ratio.denominator},{self.limit}"
        )


SWEEP_CSV_HEADER = "d,n,m,power_edges,ratio_num,ratio_den,limit"


def ratio_limit(r: int) -> int:
    """``ceil((r + 1) / 3)``, the large-``d`` ceiling of the H-family ratio."""
    return -(-(r + 1) // 3)


def sweep_row(r: int, d: int, regularize: bool = False) -> SweepRow:
    LayeredSpec(r, d)
    G = regularized_h(r, d) if regularize else layered_h(r, d)
    pe = power_edge_count(G, r)
    return SweepRow(d, G.n, G.m, pe, Fraction(pe, G.m), ratio_limit(r))


def sweep_h_ratio(r: int, d_values, regularize: bool = False) -> list[SweepRow]:
    """``e(G^r)/e(G)`` for ``G = H_r(d)`` (or ``Ĥ_r(d)``), one row per ``d`` in input order."""
    d_values = list(d_values)
    for d in d_values:
        LayeredSpec(r, d)
    return [sweep_row(r, d, regularize) for d in d_values]
