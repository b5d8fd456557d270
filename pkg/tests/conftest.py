from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from graphcert.graph import Graph

settings.register_profile(
    "graphcert",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("graphcert")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, k in zip(pairs, keep) if k]
    return Graph.from_edges(n, edges)


@st.composite
def triangle_free_graphs(draw, max_n: int = 9):
    g = draw(graphs(max_n=max_n))
    while True:
        tri = g.find_triangle()
        if tri is None:
            return g
        u, v, _w = tri
        adj = list(g.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        g = Graph(g.n, tuple(adj))
