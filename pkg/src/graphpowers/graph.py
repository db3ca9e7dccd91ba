"""Core graph types and breadth-first distance machinery.

Vertices are the dense integers ``0..n-1``. Both :class:`Graph` and
:class:`Digraph` are immutable once built; every derived quantity that is
cheap to keep (edge count, degrees) is computed at construction time.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class _Unreachable:
    """Distance marker for vertices in another component.

    Deliberately not an int: ``UNREACHABLE + 1`` or ``UNREACHABLE < 3``
    raise ``TypeError`` instead of producing a silently wrong number.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


class GraphInputError(ValueError):
    """Malformed vertex pair handed to a graph builder."""


class DisconnectedGraphError(ValueError):
    """Operation needs a connected graph (infinite diameter otherwise)."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int = field(compare=False)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adj[u]
        # rows are short at target scale; bisect would not pay off
        return v in row

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def neighbor_sets(self) -> list[frozenset[int]]:
        return [frozenset(row) for row in self.adj]

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Digraph:
    """Simple directed graph: no loops, no parallel arcs."""

    n: int
    out_adj: tuple[tuple[int, ...], ...]
    m: int = field(compare=False)

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degrees(self) -> list[int]:
        deg = [0] * self.n
        for row in self.out_adj:
            for w in row:
                deg[w] += 1
        return deg

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.out_adj[u]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.out_adj[u]]

    def is_oriented(self) -> bool:
        """True when no pair of opposite arcs exists."""
        out = [set(row) for row in self.out_adj]
        return not any(u in out[v] for u in range(self.n) for v in out[u])

    def underlying(self) -> Graph:
        return build_graph(self.n, self.arcs())

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class LayerDecomposition:
    """Distance layers ``N_0(source), ..., N_ecc(source)``."""

    source: int
    layers: tuple[frozenset[int], ...]
    ecc: int

    def layer_of(self) -> dict[int, int]:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}

    def union(self, lo: int, hi: int) -> frozenset[int]:
        """Union of layers ``lo..hi`` inclusive, clipped to existing indices."""
        lo = max(lo, 0)
        hi = min(hi, self.ecc)
        out: set[int] = set()
        for i in range(lo, hi + 1):
            out |= self.layers[i]
        return frozenset(out)


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    if u == v:
        raise GraphInputError(f"edge ({u}, {v}) is a self-loop")


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph on ``n`` vertices.

    Repeated pairs (in either orientation) are collapsed. Self-loops and
    out-of-range endpoints raise :class:`GraphInputError`.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        _check_pair(n, u, v)
        nbrs[u].add(v)
        nbrs[v].add(u)
    adj = tuple(tuple(sorted(s)) for s in nbrs)
    return Graph(n, adj, sum(len(a) for a in adj) // 2)


def build_digraph(n: int, arcs: Iterable[Sequence[int]]) -> Digraph:
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    out: list[set[int]] = [set() for _ in range(n)]
    for u, v in arcs:
        _check_pair(n, u, v)
        out[u].add(v)
    adj = tuple(tuple(sorted(s)) for s in out)
    return Digraph(n, adj, sum(len(a) for a in adj))


def _rows(G) -> tuple[tuple[int, ...], ...]:
    return G.out_adj if isinstance(G, Digraph) else G.adj


def _check_vertex(G, v: int) -> None:
    if not 0 <= v < G.n:
        raise IndexError(f"vertex {v} outside 0..{G.n - 1}")


def _bfs(rows, n: int, source: int, limit: Optional[int] = None) -> list:
    dist: list = [UNREACHABLE] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        if limit is not None and dx >= limit:
            continue
        for y in rows[x]:
            if dist[y] is UNREACHABLE:
                dist[y] = dx + 1
                queue.append(y)
    return dist


def bfs_distances(G, v: int) -> list:
    """Hop distances from ``v``; other components get :data:`UNREACHABLE`.

    Works for :class:`Digraph` too, following arcs forward.
    """
    _check_vertex(G, v)
    return _bfs(_rows(G), G.n, v)


def ball(G, v: int, r: int) -> list[int]:
    """Vertices at distance ``1..r`` from ``v`` (``v`` itself excluded), sorted."""
    _check_vertex(G, v)
    dist = _bfs(_rows(G), G.n, v, limit=r)
    return [u for u, du in enumerate(dist) if du is not UNREACHABLE and du > 0]


def layers(G, v: int) -> LayerDecomposition:
    dist = bfs_distances(G, v)
    ecc = max(d for d in dist if d is not UNREACHABLE)
    groups: list[set[int]] = [set() for _ in range(ecc + 1)]
    for u, du in enumerate(dist):
        if du is not UNREACHABLE:
            groups[du].add(u)
    return LayerDecomposition(v, tuple(frozenset(g) for g in groups), ecc)


def eccentricity(G, v: int) -> int:
    dist = bfs_distances(G, v)
    if any(d is UNREACHABLE for d in dist):
        raise DisconnectedGraphError("graph is disconnected: infinite eccentricity")
    return max(dist)


def diameter(G) -> int:
    """Largest pairwise distance, by BFS from every vertex."""
    if G.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    best = 0
    rows = _rows(G)
    for v in range(G.n):
        dist = _bfs(rows, G.n, v)
        for d in dist:
            if d is UNREACHABLE:
                raise DisconnectedGraphError("graph is disconnected: infinite diameter")
            if d > best:
                best = d
    return best


def regularity(G: Graph) -> Optional[int]:
    """The common degree if ``G`` is regular, else ``None``."""
    if G.n == 0:
        raise ValueError("regularity needs at least one vertex")
    d = len(G.adj[0])
    return d if all(len(row) == d for row in G.adj) else None


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        raise ValueError("connectivity needs at least one vertex")
    return UNREACHABLE not in _bfs(G.adj, G.n, 0)


def reach_count(G, v: int, S: Iterable[int], r: int) -> int:
    """``|{u in S : dist(v, u) <= r}|``; ``v`` counts for itself when in ``S``."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    _check_vertex(G, v)
    dist = _bfs(_rows(G), G.n, v, limit=r)
    return sum(1 for u in set(S) if dist[u] is not UNREACHABLE)
