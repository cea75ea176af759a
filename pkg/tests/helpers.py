"""Shared random-instance generators for the test suite (seeded, deterministic)."""
from __future__ import annotations

from edgepow import Graph, graph_from_edges


def random_connected_graph(rng, n_min=2, n_max=8, extra_max=4) -> Graph:
    """Random labeled tree plus a few extra edges; always connected, no isolated vertex."""
    n = rng.randint(n_min, n_max)
    edges = set()
    for v in range(2, n + 1):
        u = rng.randint(1, v - 1)
        edges.add((u, v))
    non_edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if (u, v) not in edges
    ]
    rng.shuffle(non_edges)
    for e in non_edges[: rng.randint(0, extra_max)]:
        edges.add(e)
    return graph_from_edges(n, sorted(edges))


def random_caps(rng, n, cap_max=3):
    return tuple(rng.randint(1, cap_max) for _ in range(n))
