"""Deterministic generators for the graph families used in the checks.

* circulant (Cayley) graphs and digraphs over ``Z_p``
* the layered extremal graphs ``H_r(d)`` and their ``d``-regular repair
* random connected regular graphs for property suites
* cycles and paths
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .graph import Digraph, Graph, build_digraph, build_graph, is_connected


class FamilyParameterError(ValueError):
    pass


def _residues(p: int, A: Iterable[int]) -> frozenset[int]:
    if p < 3:
        raise FamilyParameterError(f"modulus must be >= 3, got {p}")
    A = frozenset(A)
    if not A:
        raise FamilyParameterError("generator set must be nonempty")
    bad = sorted(a for a in A if not 1 <= a <= p - 1)
    if bad:
        raise FamilyParameterError(f"generators must lie in 1..{p - 1}; offending: {bad}")
    return A


def cayley_undirected(p: int, A: Iterable[int]) -> Graph:
    """Circulant graph on ``Z_p``: ``x ~ y`` iff ``x - y`` or ``y - x`` is in ``A``."""
    A = _residues(p, A)
    return build_graph(p, ((x, (x + a) % p) for x in range(p) for a in A))


def cayley_directed(p: int, A: Iterable[int]) -> Digraph:
    """Arc ``(x, y)`` iff ``x - y`` is in ``A`` (mod ``p``)."""
    A = _residues(p, A)
    return build_digraph(p, ((x, (x - a) % p) for x in range(p) for a in A))


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyParameterError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 2:
        raise FamilyParameterError(f"path needs n >= 2, got {n}")
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    return build_graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def directed_cycle(n: int) -> Digraph:
    if n < 3:
        raise FamilyParameterError(f"directed cycle needs n >= 3, got {n}")
    return build_digraph(n, ((i, (i + 1) % n) for i in range(n)))


# -- layered extremal family -------------------------------------------------


@dataclass(frozen=True)
class LayeredSpec:
    """Layer sizes of ``H_r(d)``.

    Layers ``i`` with ``i % 3 == offset`` hold ``d - 1`` vertices, the rest
    hold 2. The offset is 1 exactly when ``r % 3 == 2``, which puts a size-2
    layer at both ends and keeps end-layer degrees equal to ``d``.
    """

    r: int
    d: int

    def __post_init__(self):
        if self.r < 3:
            raise FamilyParameterError(f"layered family needs r >= 3, got {self.r}")
        if self.d < 5:
            raise FamilyParameterError(f"layered family needs d >= 5, got {self.d}")

    @property
    def offset(self) -> int:
        return 1 if self.r % 3 == 2 else 0

    @property
    def layer_sizes(self) -> list[int]:
        return [self.d - 1 if i % 3 == self.offset else 2 for i in range(self.r + 1)]

    def layer_vertices(self) -> list[list[int]]:
        out, start = [], 0
        for size in self.layer_sizes:
            out.append(list(range(start, start + size)))
            start += size
        return out

    @property
    def n(self) -> int:
        return sum(self.layer_sizes)


def layered_h(r: int, d: int) -> Graph:
    """``H_r(d)``: cliques on each layer, complete joins between consecutive layers.

    Vertex ids run layer by layer, so layer 0 is ``0..|N_0|-1`` and so on.
    """
    spec = LayeredSpec(r, d)
    groups = spec.layer_vertices()
    edges = []
    for i, layer in enumerate(groups):
        edges.extend((u, v) for k, u in enumerate(layer) for v in layer[k + 1:])
        if i + 1 < len(groups):
            edges.extend((u, v) for u in layer for v in groups[i + 1])
    return build_graph(spec.n, edges)


def interior_cycle(r: int, d: int) -> list[int]:
    """Closed walk visiting every vertex of layers ``1..r-1`` once.

    Forward pass: in each interior layer below ``r-1`` walk all but the last
    vertex, then cross to the next layer. Layer ``r-1`` is walked completely,
    ending on its last vertex. Backward pass: drop through the reserved last
    vertex of each lower interior layer; closing back to the first vertex of
    layer 1 is a within-layer edge.
    """
    groups = LayeredSpec(r, d).layer_vertices()
    interior = groups[1:r]
    walk: list[int] = []
    for layer in interior[:-1]:
        walk.extend(layer[:-1])
    walk.extend(interior[-1])
    for layer in reversed(interior[:-1]):
        walk.append(layer[-1])
    return walk


def regularized_h(r: int, d: int) -> Graph:
    """``d``-regular, connected ``Ĥ_r(d)``: ``H_r(d)`` minus one interior cycle."""
    H = layered_h(r, d)
    walk = interior_cycle(r, d)
    cyc = [tuple(sorted((walk[i], walk[(i + 1) % len(walk)]))) for i in range(len(walk))]
    if len(set(cyc)) != len(cyc) or not all(H.has_edge(u, v) for u, v in cyc):
        raise AssertionError(f"interior cycle for r={r}, d={d} is not a cycle of H_r(d)")
    drop = set(cyc)
    return build_graph(H.n, (e for e in H.edges() if e not in drop))


# -- random regular ----------------------------------------------------------


def _try_pairing(n: int, d: int, rng: random.Random):
    """One attempt at a simple ``d``-regular edge set, or ``None``.

    Stubs are paired at random; bad pairs (loops, repeats) go back into the
    pool and are reshuffled until nothing is left or no valid pair remains.
    """
    edges: set[tuple[int, int]] = set()
    stubs = [v for v in range(n) for _ in range(d)]
    while stubs:
        leftover: list[int] = []
        rng.shuffle(stubs)
        it = iter(stubs)
        for a, b in zip(it, it):
            if a > b:
                a, b = b, a
            if a != b and (a, b) not in edges:
                edges.add((a, b))
            else:
                leftover.extend((a, b))
        if not leftover:
            break
        pool = sorted(set(leftover))
        if not any(
            (pool[i], pool[j]) not in edges
            for i in range(len(pool))
            for j in range(i + 1, len(pool))
        ):
            return None
        stubs = leftover
    return edges


def random_regular_connected(n: int, d: int, seed: int, max_attempts: int = 10_000) -> Graph:
    """A connected simple ``d``-regular graph on ``n`` vertices.

    The whole edge set is redrawn on any dead end or disconnection. Same
    ``(n, d, seed)`` always gives the same graph.
    """
    if d < 2:
        raise FamilyParameterError(f"degree must be >= 2, got {d}")
    if d >= n:
        raise FamilyParameterError(f"degree {d} must be below n={n}")
    if (n * d) % 2:
        raise FamilyParameterError(f"n*d must be even, got {n}*{d}")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        edges = _try_pairing(n, d, rng)
        if edges is None:
            continue
        G = build_graph(n, sorted(edges))
        if is_connected(G):
            return G
    raise RuntimeError(f"no connected {d}-regular graph on {n} vertices after {max_attempts} attempts")
