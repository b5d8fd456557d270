"""Constructors for the named graph families and the seeded samplers.

Every constructor is deterministic; samplers are deterministic given
their seed.  Each family has a canonical string form used by the CLI,
for example ``g58``, ``extremalC:7``, ``schrijver:3,2`` or
``gnp:12,0.4,seed=7``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import MAX_VERTICES, Graph


def cycle(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n <= 1:
        return Graph.empty(n)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return Graph.from_edges(n, combinations(range(n), 2))


def circulant(n: int, distances: tuple[int, ...]) -> Graph:
    """Vertices 0..n-1 on a ring; u ~ v iff |u - v| mod n is a distance."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    dset = sorted(set(distances))
    for d in dset:
        if not 1 <= d <= n // 2:
            raise ValueError(f"distance {d} outside 1..{n // 2}")
    edges = set()
    for v in range(n):
        for d in dset:
            u = (v + d) % n
            edges.add((min(v, u), max(v, u)))
    return Graph.from_edges(n, sorted(edges))


def ramsey_r35() -> Graph:
    """The 13-vertex triangle-free graph with stability number 4,
    realized as the circulant with distances {1, 5}."""
    return circulant(13, (1, 5))


def g58() -> Graph:
    """The 15-vertex extremal graph: subdivide the lexicographically
    smallest edge of the 13-vertex Ramsey graph twice."""
    base = ramsey_r35()
    u, v = base.edges()[0]
    return base.subdivide_edge(u, v, 2)


def eight_fifths_extremal(x: int) -> Graph:
    """Graph with stability number x and cover number floor(8x/5):
    floor(x/5) copies of the 15-vertex extremal graph plus a residue of
    pentagons and isolated vertices."""
    if x < 0:
        raise ValueError("stability target must be nonnegative")
    k, r = divmod(x, 5)
    g = Graph.empty(0)
    block = g58() if k else None
    for _ in range(k):
        g = g.disjoint_union(block)
    if r == 1:
        g = g.add_isolated_vertices(1)
    elif r == 2:
        g = g.disjoint_union(cycle(5))
    elif r == 3:
        g = g.disjoint_union(cycle(5)).add_isolated_vertices(1)
    elif r == 4:
        g = g.disjoint_union(cycle(5)).disjoint_union(cycle(5))
    return g


# ----------------------------------------------------------------------
# Kneser and Schrijver graphs

def kneser_labels(n: int, k: int) -> list[tuple[int, ...]]:
    """The n-subsets of {1..2n+k} in lexicographic order."""
    if n < 1:
        raise ValueError("subset size must be at least 1")
    if k < 0:
        raise ValueError("excess must be nonnegative")
    return list(combinations(range(1, 2 * n + k + 1), n))


def _disjointness_graph(labels: list[tuple[int, ...]]) -> Graph:
    if len(labels) > MAX_VERTICES:
        raise ValueError(
            f"{len(labels)} vertices exceed the {MAX_VERTICES}-vertex cap"
        )
    masks = [sum(1 << e for e in s) for s in labels]
    edges = [
        (i, j)
        for i, j in combinations(range(len(masks)), 2)
        if masks[i] & masks[j] == 0
    ]
    return Graph.from_edges(len(masks), edges)


def kneser(n: int, k: int) -> Graph:
    """n-subsets of a (2n+k)-set, adjacent when disjoint."""
    return _disjointness_graph(kneser_labels(n, k))


def _is_sparse(subset: tuple[int, ...], universe: int) -> bool:
    for a, b in zip(subset, subset[1:]):
        if b - a == 1:
            return False
    return not (subset[0] == 1 and subset[-1] == universe)


def sparse_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """n-subsets of {1..2n+k} with no two cyclically consecutive
    elements, in lexicographic order."""
    universe = 2 * n + k
    for subset in combinations(range(1, universe + 1), n):
        if _is_sparse(subset, universe):
            yield subset


def schrijver_labels(n: int, k: int) -> list[tuple[int, ...]]:
    if n < 1:
        raise ValueError("subset size must be at least 1")
    if k < 1:
        raise ValueError("excess must be at least 1")
    return list(sparse_subsets(n, k))


def schrijver(n: int, k: int) -> Graph:
    """The subgraph of the matching Kneser graph induced on sparse sets."""
    return _disjointness_graph(schrijver_labels(n, k))


def schrijver_order(n: int, k: int) -> int:
    """Closed-form vertex count of the sparse-set graph."""
    if n < 1 or k < 1:
        raise ValueError("parameters out of range")
    return math.comb(n + k, n) + math.comb(n + k - 1, n - 1)


# ----------------------------------------------------------------------
# seeded samplers

def gnp(n: int, p: float, seed: int) -> Graph:
    """Binomial random graph; each pair independently an edge."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if not 0 <= p <= 1:
        raise ValueError("probability out of range")
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_bipartite(a: int, b: int, p: float, seed: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("side sizes must be nonnegative")
    if not 0 <= p <= 1:
        raise ValueError("probability out of range")
    rng = random.Random(seed)
    edges = [
        (u, a + v)
        for u in range(a)
        for v in range(b)
        if rng.random() < p
    ]
    return Graph.from_edges(a + b, edges)


def random_3partite(a: int, b: int, c: int, p: float, seed: int) -> Graph:
    """Random graph with three stable parts; 3-colourable by construction."""
    if a < 0 or b < 0 or c < 0:
        raise ValueError("part sizes must be nonnegative")
    if not 0 <= p <= 1:
        raise ValueError("probability out of range")
    rng = random.Random(seed)
    n = a + b + c
    part = [0] * a + [1] * b + [2] * c
    edges = [
        (u, v)
        for u, v in combinations(range(n), 2)
        if part[u] != part[v] and rng.random() < p
    ]
    return Graph.from_edges(n, edges)


# ----------------------------------------------------------------------
# family specification strings

_INT_PARAMS = {
    "cycle": 1,
    "complete": 1,
    "extremalC": 1,
    "kneser": 2,
    "schrijver": 2,
}


@dataclass(frozen=True)
class FamilySpec:
    """Parsed form of a canonical family string."""

    tag: str
    params: tuple
    seed: int | None = None

    def canonical(self) -> str:
        parts = [_format_param(p) for p in self.params]
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        if parts:
            return f"{self.tag}:{','.join(parts)}"
        return self.tag


def _format_param(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse_number(text: str, want_float: bool):
    try:
        return float(text) if want_float else int(text)
    except ValueError as exc:
        raise ValueError(f"bad numeric parameter {text!r}") from exc


def parse_family_spec(text: str) -> FamilySpec:
    text = text.strip()
    tag, _, arg_text = text.partition(":")
    args = [a for a in arg_text.split(",") if a] if arg_text else []
    seed: int | None = None
    if args and args[-1].startswith("seed="):
        seed = _parse_number(args[-1][5:], want_float=False)
        args = args[:-1]
    if tag == "random-gnp":
        tag = "gnp"
    if tag in ("ramsey35", "g58"):
        if args or seed is not None:
            raise ValueError(f"{tag} takes no parameters")
        return FamilySpec(tag, ())
    if tag in _INT_PARAMS:
        want = _INT_PARAMS[tag]
        if len(args) != want or seed is not None:
            raise ValueError(f"{tag} needs exactly {want} integer parameter(s)")
        return FamilySpec(tag, tuple(_parse_number(a, False) for a in args))
    if tag == "circulant":
        if len(args) < 1 or seed is not None:
            raise ValueError("circulant needs a vertex count and distances")
        return FamilySpec(tag, tuple(_parse_number(a, False) for a in args))
    if tag == "gnp":
        if len(args) != 2:
            raise ValueError("gnp needs vertex count and probability")
        n = _parse_number(args[0], False)
        p = _parse_number(args[1], True)
        return FamilySpec(tag, (n, p), 0 if seed is None else seed)
    if tag == "random-bipartite":
        if len(args) != 3:
            raise ValueError("random-bipartite needs two sizes and a probability")
        a, b = (_parse_number(x, False) for x in args[:2])
        p = _parse_number(args[2], True)
        return FamilySpec(tag, (a, b, p), 0 if seed is None else seed)
    if tag == "random-3partite":
        if len(args) != 4:
            raise ValueError("random-3partite needs three sizes and a probability")
        a, b, c = (_parse_number(x, False) for x in args[:3])
        p = _parse_number(args[3], True)
        return FamilySpec(tag, (a, b, c, p), 0 if seed is None else seed)
    raise ValueError(f"unknown family tag {tag!r}")


def build_family(spec: FamilySpec) -> Graph:
    tag, params = spec.tag, spec.params
    if tag == "cycle":
        return cycle(*params)
    if tag == "complete":
        return complete(*params)
    if tag == "circulant":
        return circulant(params[0], tuple(params[1:]))
    if tag == "ramsey35":
        return ramsey_r35()
    if tag == "g58":
        return g58()
    if tag == "extremalC":
        return eight_fifths_extremal(*params)
    if tag == "kneser":
        return kneser(*params)
    if tag == "schrijver":
        return schrijver(*params)
    if tag == "gnp":
        return gnp(params[0], params[1], spec.seed)
    if tag == "random-bipartite":
        return random_bipartite(params[0], params[1], params[2], spec.seed)
    if tag == "random-3partite":
        return random_3partite(params[0], params[1], params[2], params[3], spec.seed)
    raise ValueError(f"unknown family tag {tag!r}")


def graph_from_spec(text: str) -> Graph:
    return build_family(parse_family_spec(text))
