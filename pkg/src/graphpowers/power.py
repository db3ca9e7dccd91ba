"""Graph powers and edge-growth profiles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import (
    Digraph,
    DisconnectedGraphError,
    Graph,
    _bfs,
    diameter,
    is_connected,
)

ORACLE_MAX_N = 1000


def _power_rows(rows, n: int, r: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for v in range(n):
        dist = _bfs(rows, n, v, limit=r)
        out.append(tuple(u for u in range(n) if u != v and isinstance(dist[u], int)))
    return tuple(out)


def graph_power(G: Graph, r: int) -> Graph:
    """``G^r``: join every pair at distance ``1..r``.

    One depth-truncated BFS per vertex. ``r`` beyond the diameter simply
    yields the complete graph on each component.
    """
    if r < 1:
        raise ValueError(f"power must be >= 1, got {r}")
    adj = _power_rows(G.adj, G.n, r)
    return Graph(G.n, adj, sum(len(a) for a in adj) // 2)


def digraph_power(D: Digraph, r: int) -> Digraph:
    """Arc ``(x, y)`` whenever ``y`` is reachable from ``x`` in ``1..r`` steps."""
    if r < 1:
        raise ValueError(f"power must be >= 1, got {r}")
    adj = _power_rows(D.out_adj, D.n, r)
    return Digraph(D.n, adj, sum(len(a) for a in adj))


def power_edge_count(G, r: int) -> int:
    """``e(G^r)`` (arcs for a digraph) without materializing the power."""
    if r < 1:
        raise ValueError(f"power must be >= 1, got {r}")
    directed = isinstance(G, Digraph)
    rows = G.out_adj if directed else G.adj
    total = 0
    for v in range(G.n):
        dist = _bfs(rows, G.n, v, limit=r)
        total += sum(1 for d in dist if isinstance(d, int)) - 1
    return total if directed else total // 2


def adjacency_matrix(G) -> np.ndarray:
    rows = G.out_adj if isinstance(G, Digraph) else G.adj
    A = np.zeros((G.n, G.n), dtype=np.float64)
    for u, row in enumerate(rows):
        A[u, list(row)] = 1.0
    return A


def power_oracle(G: Graph, r: int) -> Graph:
    """Reference ``G^r`` from dense boolean matrix products.

    ``(I + A)^r`` has a nonzero at ``(x, y)`` iff ``y`` is within ``r`` steps
    of ``x``. Kept separate from :func:`graph_power` purely for
    cross-validation; refuses graphs above ``ORACLE_MAX_N`` vertices.
    """
    if G.n > ORACLE_MAX_N:
        raise ValueError(f"power_oracle is dense; n={G.n} exceeds {ORACLE_MAX_N}")
    if r < 1:
        raise ValueError(f"power must be >= 1, got {r}")
    step = adjacency_matrix(G) + np.eye(G.n)
    reach = step.copy()
    for _ in range(r - 1):
        # clamp to 0/1 each round so entries stay small and exact in float64
        reach = ((reach @ step) > 0).astype(np.float64)
    reach = reach > 0
    np.fill_diagonal(reach, False)
    adj = tuple(tuple(int(x) for x in np.flatnonzero(reach[u])) for u in range(G.n))
    return Graph(G.n, adj, sum(len(a) for a in adj) // 2)


@dataclass(frozen=True)
class GrowthRow:
    r: int
    power_edges: int
    ratio: Fraction


@dataclass(frozen=True)
class GrowthProfile:
    base_edges: int
    rows: tuple[GrowthRow, ...]
    diam: int

    def to_csv(self) -> str:
        lines = ["r,edges,ratio_num,ratio_den"]
        for row in self.rows:
            lines.append(f"{row.r},{row.power_edges},{row.ratio.numerator},{row.ratio.denominator}")
        return "\n".join(lines) + "\n"


def growth_profile(G: Graph) -> GrowthProfile:
    """Exact ``e(G^r)`` and ``e(G^r)/e(G)`` for ``r = 1..diam(G)``."""
    if G.n == 0 or not is_connected(G):
        raise DisconnectedGraphError("growth profile needs a connected graph")
    if G.m == 0:
        raise ValueError("growth profile of an edgeless graph is undefined")
    diam = diameter(G)
    # one full BFS per source gives every r at once
    hist = [0] * (diam + 1)
    for v in range(G.n):
        for d in _bfs(G.adj, G.n, v):
            hist[d] += 1
    rows = []
    running = 0
    for r in range(1, diam + 1):
        running += hist[r]
        edges = running // 2
        rows.append(GrowthRow(r, edges, Fraction(edges, G.m)))
    return GrowthProfile(G.m, tuple(rows), diam)
