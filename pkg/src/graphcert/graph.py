"""Immutable bitset-backed simple graphs and basic structural operations.

Vertices are dense 0-based integers.  Each adjacency row is a Python int
used as an arbitrary-width bitset, which keeps solver inner loops
allocation-free and makes graphs cheap to hash, compare and share between
workers.  Every constructor validates symmetry, irreflexivity and the
vertex range, so a ``Graph`` in hand is always well formed.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Iterator

#: Hard cap on vertex count; raise it if you genuinely need bigger graphs.
MAX_VERTICES = 512


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex labels into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """A finite simple graph with one bitset adjacency row per vertex.

    Instances are immutable: editing operations return fresh graphs, so
    values can be shared freely across threads or cached by identity.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    # ------------------------------------------------------------------
    # constructors

    @staticmethod
    def empty(n: int) -> Graph:
        return Graph(n, (0,) * n)

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u},{v}) rejected")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if (rows[u] >> v) & 1:
                raise ValueError(f"duplicate edge ({u},{v}) rejected")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    # ------------------------------------------------------------------
    # queries

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if v > u:
                    out.append((u, v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    # ------------------------------------------------------------------
    # editing operations (all return fresh graphs)

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(
            self.n,
            tuple((full & ~row & ~(1 << v)) for v, row in enumerate(self.adj)),
        )

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabelled 0.. in their sorted order."""
        vs = sorted(set(vertices))
        for v in vs:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} outside range 0..{self.n - 1}")
        rows = []
        for v in vs:
            row = 0
            for j, u in enumerate(vs):
                if (self.adj[v] >> u) & 1:
                    row |= 1 << j
            rows.append(row)
        return Graph(len(vs), tuple(rows))

    def disjoint_union(self, other: Graph) -> Graph:
        """Disjoint union; the second graph's labels are shifted by ``self.n``."""
        shifted = tuple(row << self.n for row in other.adj)
        return Graph(self.n + other.n, self.adj + shifted)

    def subdivide_edge(self, u: int, v: int, t: int) -> Graph:
        """Replace the edge uv by a path through ``t`` fresh vertices."""
        if t < 1:
            raise ValueError("subdivision needs at least one new vertex")
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        rows = list(self.adj) + [0] * t
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        path = [u] + list(range(self.n, self.n + t)) + [v]
        for a, b in zip(path, path[1:]):
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n + t, tuple(rows))

    def add_isolated_vertices(self, t: int) -> Graph:
        if t < 0:
            raise ValueError("cannot add a negative number of vertices")
        return Graph(self.n + t, self.adj + (0,) * t)

    # ------------------------------------------------------------------
    # structural predicates

    def connected_components(self) -> list[tuple[int, ...]]:
        """Components as sorted vertex tuples, ordered by smallest member."""
        seen = 0
        comps = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(tuple(bits(comp)))
        return comps

    def is_connected(self) -> bool:
        """True when there is at most one component (the empty graph counts)."""
        return len(self.connected_components()) <= 1

    def two_coloring(self) -> list[int] | None:
        """A proper 2-colouring as a 0/1 list, or None if none exists."""
        colour = [-1] * self.n
        for s in range(self.n):
            if colour[s] >= 0:
                continue
            colour[s] = 0
            queue = [s]
            while queue:
                v = queue.pop()
                for u in bits(self.adj[v]):
                    if colour[u] < 0:
                        colour[u] = 1 - colour[v]
                        queue.append(u)
                    elif colour[u] == colour[v]:
                        return None
        return colour

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    def find_triangle(self) -> tuple[int, int, int] | None:
        """Lexicographically first triangle, or None if the graph has none."""
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if v <= u:
                    continue
                common = self.adj[u] & self.adj[v]
                if common:
                    w = (common & -common).bit_length() - 1
                    return tuple(sorted((u, v, w)))  # type: ignore[return-value]
        return None

    def odd_girth(self) -> int | None:
        """Length of a shortest odd cycle, or None when the graph is bipartite.

        A breadth-first search from each vertex turns every edge whose ends
        sit at equal-parity distance into a closed odd walk; the minimum walk
        length over all sources equals the odd girth.
        """
        best: int | None = None
        for s in range(self.n):
            dist = [-1] * self.n
            dist[s] = 0
            frontier = [s]
            while frontier:
                nxt = []
                for v in frontier:
                    for u in bits(self.adj[v]):
                        if dist[u] < 0:
                            dist[u] = dist[v] + 1
                            nxt.append(u)
                frontier = nxt
            for u in range(self.n):
                if dist[u] < 0:
                    continue
                for v in bits(self.adj[u]):
                    if v > u and dist[v] >= 0:
                        length = dist[u] + dist[v] + 1
                        if length % 2 == 1 and (best is None or length < best):
                            best = length
        return best
