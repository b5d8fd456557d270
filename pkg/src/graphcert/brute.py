"""Slow direct-from-definition computations used as cross-check oracles.

Everything here enumerates rather than prunes, and shares no code with
the optimised solvers.  Sizes are capped hard because the point is
trust, not speed.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .graph import Graph, bits, mask_of

BRUTE_VERTEX_CAP = 22
ISO_VERTEX_CAP = 8


def _require_small(g: Graph, cap: int = BRUTE_VERTEX_CAP) -> None:
    if g.n > cap:
        raise ValueError(f"brute-force oracle capped at {cap} vertices, got {g.n}")


def _is_stable_mask(g: Graph, m: int) -> bool:
    return all(g.adj[v] & m == 0 for v in bits(m))


def _is_clique_mask(g: Graph, m: int) -> bool:
    return all(g.adj[v] & m == m & ~(1 << v) for v in bits(m))


def alpha_brute(g: Graph) -> int:
    """Largest stable set size, by scanning all vertex subsets."""
    _require_small(g)
    best = 0
    for m in range(1 << g.n):
        if m.bit_count() > best and _is_stable_mask(g, m):
            best = m.bit_count()
    return best


def omega_brute(g: Graph) -> int:
    """Largest clique size, by scanning all vertex subsets."""
    _require_small(g)
    best = 0
    for m in range(1 << g.n):
        if m.bit_count() > best and _is_clique_mask(g, m):
            best = m.bit_count()
    return best


def chi_brute(g: Graph) -> int:
    """Chromatic number via the partition-into-stable-sets recurrence."""
    _require_small(g, 18)
    if g.n == 0:
        return 0
    full = (1 << g.n) - 1
    stable_cache: dict[int, bool] = {}

    def stable(m: int) -> bool:
        got = stable_cache.get(m)
        if got is None:
            got = stable_cache[m] = _is_stable_mask(g, m)
        return got

    @lru_cache(maxsize=None)
    def parts(rest: int) -> int:
        if rest == 0:
            return 0
        v = rest & -rest
        best = g.n
        # enumerate stable subsets of rest containing the lowest vertex
        sub = rest
        while sub:
            if sub & v and stable(sub):
                best = min(best, 1 + parts(rest & ~sub))
            sub = (sub - 1) & rest
        return best

    result = parts(full)
    parts.cache_clear()
    return result


def theta_brute(g: Graph) -> int:
    """Clique cover number via partition into cliques, no complement trick."""
    _require_small(g, 18)
    if g.n == 0:
        return 0
    full = (1 << g.n) - 1
    clique_cache: dict[int, bool] = {}

    def clique(m: int) -> bool:
        got = clique_cache.get(m)
        if got is None:
            got = clique_cache[m] = _is_clique_mask(g, m)
        return got

    @lru_cache(maxsize=None)
    def parts(rest: int) -> int:
        if rest == 0:
            return 0
        v = rest & -rest
        best = g.n
        sub = rest
        while sub:
            if sub & v and clique(sub):
                best = min(best, 1 + parts(rest & ~sub))
            sub = (sub - 1) & rest
        return best

    result = parts(full)
    parts.cache_clear()
    return result


def nu_brute(g: Graph) -> int:
    """Maximum matching size by recursion over the lowest uncovered vertex."""
    _require_small(g)

    @lru_cache(maxsize=None)
    def rec(avail: int) -> int:
        if avail == 0:
            return 0
        v = avail.bit_length() - 1  # take the highest to keep masks shrinking
        rest = avail & ~(1 << v)
        best = rec(rest)  # leave v unmatched
        for u in bits(g.adj[v] & rest):
            best = max(best, 1 + rec(rest & ~(1 << u)))
        return best

    result = rec((1 << g.n) - 1)
    rec.cache_clear()
    return result


def max_deficiency_brute(g: Graph) -> int:
    """max over induced subgraphs H of |V(H)| - 2 alpha(H), all subsets."""
    _require_small(g, 16)
    n = g.n
    # alpha over every subset, bottom-up
    tab = [0] * (1 << n)
    for m in range(1, 1 << n):
        v = (m & -m).bit_length() - 1
        without = m & ~(1 << v)
        closed = m & ~(g.adj[v] | (1 << v))
        tab[m] = max(tab[without], 1 + tab[closed])
    best = 0
    for m in range(1 << n):
        best = max(best, m.bit_count() - 2 * tab[m])
    return best


def is_isomorphic_brute(a: Graph, b: Graph) -> bool:
    """Permutation scan; only for tiny graphs."""
    if a.n > ISO_VERTEX_CAP or b.n > ISO_VERTEX_CAP:
        raise ValueError(f"isomorphism scan capped at {ISO_VERTEX_CAP} vertices")
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if sorted(map(a.degree, range(a.n))) != sorted(map(b.degree, range(b.n))):
        return False
    verts = range(a.n)
    for perm in permutations(verts):
        if all(
            a.has_edge(u, v) == b.has_edge(perm[u], perm[v])
            for u, v in combinations(verts, 2)
        ):
            return True
    return False


def all_labeled_graphs(n: int):
    """Yield every labeled simple graph on n vertices, lex order of edge sets."""
    if n > 6:
        raise ValueError("exhaustive enumeration capped at 6 vertices")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if code >> i & 1]
        yield Graph.from_edges(n, edges)


def has_cycle_of_length(g: Graph, k: int) -> bool:
    """Does g contain a simple cycle on exactly k vertices?"""
    _require_small(g, 16)
    if k < 3:
        return False

    def extend(start: int, last: int, used: int, depth: int) -> bool:
        if depth == k:
            return bool(g.adj[last] >> start & 1)
        for w in bits(g.adj[last] & ~used):
            if w < start:
                continue
            if extend(start, w, used | (1 << w), depth + 1):
                return True
        return False

    return any(extend(s, s, 1 << s, 1) for s in range(g.n))
