"""Shared fixtures and brute-force oracles.

The oracles here never call into the BFS code they check: distances come
from Floyd-Warshall, circulant distances from iterated sumsets, and
layered-family sizes from closed-form counts.
"""

from itertools import product
from math import comb

import pytest

from graphpowers import (
    cayley_undirected,
    cycle,
    random_regular_connected,
    regularized_h,
)

INF = float("inf")


def floyd_warshall(n, edges, directed=False):
    dist = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        dist[u][v] = 1
        if not directed:
            dist[v][u] = 1
    for k, i, j in product(range(n), repeat=3):
        if dist[i][k] + dist[k][j] < dist[i][j]:
            dist[i][j] = dist[i][k] + dist[k][j]
    return dist


def brute_power_edges(n, edges, r, directed=False):
    dist = floyd_warshall(n, edges, directed)
    if directed:
        return {(u, v) for u in range(n) for v in range(n) if u != v and dist[u][v] <= r}
    return {(u, v) for u in range(n) for v in range(u + 1, n) if dist[u][v] <= r}


def sumset_distance(p, A, directed=False):
    """dist(0, x) in the circulant graph, as the least k with x in the k-fold sumset."""
    steps = {(-a) % p for a in A} if directed else {a % p for a in A} | {(-a) % p for a in A}
    dist = {0: 0}
    frontier = {0}
    k = 0
    while frontier:
        k += 1
        frontier = {(x + s) % p for x in frontier for s in steps} - dist.keys()
        for x in frontier:
            dist[x] = k
    return dist


def layered_sizes(r, d):
    off = 1 if r % 3 == 2 else 0
    return [d - 1 if i % 3 == off else 2 for i in range(r + 1)]


def layered_edge_count(r, d):
    s = layered_sizes(r, d)
    return sum(comb(x, 2) for x in s) + sum(s[i] * s[i + 1] for i in range(r))


def regular_suite():
    """Regular connected graphs of moderate size used by several modules."""
    graphs = [cycle(n) for n in (5, 7, 9, 12, 15)]
    graphs += [cayley_undirected(p, A) for p, A in [(13, {1, 2}), (17, {1, 3}), (19, {1, 2, 3}), (23, {1, 5, 7})]]
    graphs += [regularized_h(r, d) for r in (3, 4, 5, 6) for d in (5, 7, 9)]
    graphs += [random_regular_connected(n, d, seed) for n, d, seed in [(20, 3, 1), (30, 4, 7), (36, 5, 2), (40, 7, 1), (40, 8, 3)]]
    return graphs


@pytest.fixture(scope="session")
def regular_graphs():
    return regular_suite()


# -- acceptance summary ---------------------------------------------------------

_acceptance_results = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        doc = getattr(report, "criterion", None) or report.nodeid.rsplit("::", 1)[-1]
        _acceptance_results.append((doc, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and marker.args:
        rep.criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for doc, outcome in _acceptance_results:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {doc}")
