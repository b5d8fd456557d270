"""Exact solvers for clique, stable set, colouring, clique cover and
matching, plus the criticality predicates and constructive covers built
on top of them.

Branch-and-bound searches are deterministic: vertex order is fixed by
label and every tie breaks toward the lowest label, so certificates are
reproducible across runs.  Budgets are hard limits; when exhausted the
solver raises instead of returning an approximate answer.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass

from .certificates import (
    CliqueCertificate,
    CliqueCoverCertificate,
    MatchingCertificate,
    StableSetCertificate,
    coloring_from_assignment,
    cover_from_masks,
)
from .graph import Graph, bits, mask_of

DEFAULT_MAX_NODES = 20_000_000
DEFAULT_MAX_ENUM_VERTICES = 20
DEFAULT_TIME_CAP = 60.0

# recursion bottoms out in an exact cover solve at this size
_COVER_BASE_SIZE = 12


class BudgetExceededError(RuntimeError):
    """A solver ran out of its node or time budget."""


class UndecidedError(RuntimeError):
    """The question cannot be settled within the given budget."""


@dataclass(frozen=True)
class Budget:
    max_nodes: int = DEFAULT_MAX_NODES
    max_enum_vertices: int = DEFAULT_MAX_ENUM_VERTICES
    time_cap: float = DEFAULT_TIME_CAP

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_enum_vertices <= 0 or self.time_cap <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = Budget()


@dataclass
class SolveStats:
    nodes: int
    elapsed: float


@dataclass(frozen=True)
class SolveResult:
    value: int
    certificate: object
    stats: SolveStats


class _Search:
    """Node counter shared across the sub-solves of one public call."""

    __slots__ = ("budget", "nodes", "start", "_next_time_check")

    def __init__(self, budget: Budget) -> None:
        self.budget = budget
        self.nodes = 0
        self.start = time.perf_counter()
        self._next_time_check = 4096

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceededError(
                f"node budget {self.budget.max_nodes} exhausted"
            )
        if self.nodes >= self._next_time_check:
            self._next_time_check = self.nodes + 4096
            if time.perf_counter() - self.start > self.budget.time_cap:
                raise BudgetExceededError(
                    f"time cap {self.budget.time_cap}s exhausted"
                )

    def stats(self) -> SolveStats:
        return SolveStats(self.nodes, time.perf_counter() - self.start)


# ----------------------------------------------------------------------
# maximum clique

def _color_order(g: Graph, cand: int) -> tuple[list[int], list[int]]:
    """Greedy colour classes over cand; orders vertices by class index.

    The returned bound[i] (class index + 1) caps the size of any clique
    inside the first i+1 ordered vertices.
    """
    classes: list[int] = []
    for v in bits(cand):
        for i, cm in enumerate(classes):
            if g.adj[v] & cm == 0:
                classes[i] = cm | (1 << v)
                break
        else:
            classes.append(1 << v)
    order: list[int] = []
    bound: list[int] = []
    for i, cm in enumerate(classes):
        for v in bits(cm):
            order.append(v)
            bound.append(i + 1)
    return order, bound


def _clique_core(g: Graph, region: int, search: _Search) -> tuple[int, int]:
    """Best clique (size, mask) inside the vertex mask region."""
    adj = g.adj
    best = 0
    best_mask = 0

    def expand(rmask: int, rsize: int, cand: int) -> None:
        nonlocal best, best_mask
        search.tick()
        order, bound = _color_order(g, cand)
        for i in range(len(order) - 1, -1, -1):
            if rsize + bound[i] <= best:
                return
            v = order[i]
            vbit = 1 << v
            cand &= ~vbit
            nxt = cand & adj[v]
            if nxt:
                expand(rmask | vbit, rsize + 1, nxt)
            elif rsize + 1 > best:
                best = rsize + 1
                best_mask = rmask | vbit

    if region:
        expand(0, 0, region)
    return best, best_mask


def max_clique(g: Graph, budget: Budget | None = None) -> SolveResult:
    """Maximum clique, solved per connected component."""
    search = _Search(budget or DEFAULT_BUDGET)
    best = 0
    best_mask = 0
    for comp in g.connected_components():
        size, mask = _clique_core(g, mask_of(comp), search)
        if size > best:
            best, best_mask = size, mask
    cert = CliqueCertificate(tuple(bits(best_mask)))
    return SolveResult(best, cert, search.stats())


def max_stable_set(g: Graph, budget: Budget | None = None) -> SolveResult:
    """Maximum stable set: per component, a clique of the complement."""
    search = _Search(budget or DEFAULT_BUDGET)
    total = 0
    chosen: list[int] = []
    for comp in g.connected_components():
        sub = g.induced_subgraph(comp)
        size, mask = _clique_core(sub.complement(), (1 << sub.n) - 1, search)
        total += size
        chosen.extend(comp[i] for i in bits(mask))
    cert = StableSetCertificate(tuple(sorted(chosen)))
    return SolveResult(total, cert, search.stats())


# ----------------------------------------------------------------------
# chromatic number

def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    colors = [-1] * n
    forb = [0] * n
    deg = [g.degree(v) for v in range(n)]
    for _ in range(n):
        best_v = -1
        best_key = (-1, -1, 0)
        for v in range(n):
            if colors[v] >= 0:
                continue
            key = (forb[v].bit_count(), deg[v], -v)
            if key > best_key:
                best_key, best_v = key, v
        f = forb[best_v]
        c = 0
        while f >> c & 1:
            c += 1
        colors[best_v] = c
        cbit = 1 << c
        for u in bits(g.adj[best_v]):
            forb[u] |= cbit
    return colors


def _colourable(
    g: Graph, k: int, clique: tuple[int, ...], search: _Search
) -> list[int] | None:
    """Proper k-colouring or None; the clique is pre-coloured for symmetry."""
    n = g.n
    full_k = (1 << k) - 1
    color = [-1] * n
    forb = [0] * n
    deg = [g.degree(v) for v in range(n)]
    for idx, v in enumerate(clique):
        color[v] = idx
        cbit = 1 << idx
        for u in bits(g.adj[v]):
            forb[u] |= cbit
    used = len(clique)
    remaining = n - used

    def rec(remaining: int, used: int) -> bool:
        search.tick()
        if remaining == 0:
            return True
        best_v = -1
        best_key = (-1, -1, 0)
        for v in range(n):
            if color[v] >= 0:
                continue
            key = ((forb[v] & full_k).bit_count(), deg[v], -v)
            if key > best_key:
                best_key, best_v = key, v
        v = best_v
        avail = ~forb[v] & ((1 << min(k, used + 1)) - 1)
        while avail:
            cbit = avail & -avail
            avail ^= cbit
            c = cbit.bit_length() - 1
            color[v] = c
            touched = []
            for u in bits(g.adj[v]):
                if color[u] < 0 and not forb[u] & cbit:
                    forb[u] |= cbit
                    touched.append(u)
            if rec(remaining - 1, used if c < used else c + 1):
                return True
            for u in touched:
                forb[u] ^= cbit
            color[v] = -1
        return False

    if rec(remaining, used):
        return color
    return None


def _chromatic_connected(g: Graph, search: _Search) -> tuple[int, list[int]]:
    n = g.n
    if n == 0:
        return 0, []
    if g.edge_count == 0:
        return 1, [0] * n
    two = g.two_coloring()
    if two is not None:
        return 2, two
    csize, cmask = _clique_core(g, (1 << n) - 1, search)
    clique = tuple(bits(cmask))
    greedy = _dsatur_greedy(g)
    ub = max(greedy) + 1
    lb = max(csize, 3)
    if lb >= ub:
        return ub, greedy
    for k in range(lb, ub):
        res = _colourable(g, k, clique, search)
        if res is not None:
            return k, res
    return ub, greedy


def _solve_chromatic(g: Graph, search: _Search) -> tuple[int, list[int]]:
    """Chromatic number with per-component decomposition; colours form a
    contiguous prefix 0..value-1 so component colourings merge directly."""
    colors = [0] * g.n
    value = 0
    for comp in g.connected_components():
        sub = g.induced_subgraph(comp)
        k, sub_colors = _chromatic_connected(sub, search)
        for i, v in enumerate(comp):
            colors[v] = sub_colors[i]
        value = max(value, k)
    return value, colors


def chromatic_number(g: Graph, budget: Budget | None = None) -> SolveResult:
    search = _Search(budget or DEFAULT_BUDGET)
    value, colors = _solve_chromatic(g, search)
    return SolveResult(value, coloring_from_assignment(colors), search.stats())


def clique_cover_number(g: Graph, budget: Budget | None = None) -> SolveResult:
    """Minimum clique cover: colour the complement of each component."""
    search = _Search(budget or DEFAULT_BUDGET)
    total = 0
    cover_masks: list[int] = []
    for comp in g.connected_components():
        sub = g.induced_subgraph(comp)
        k, colors = _solve_chromatic(sub.complement(), search)
        total += k
        by_color: dict[int, int] = {}
        for i, c in enumerate(colors):
            by_color[c] = by_color.get(c, 0) | (1 << comp[i])
        for c in sorted(by_color):
            cover_masks.append(by_color[c])
    cert = cover_from_masks(cover_masks)
    return SolveResult(total, cert, search.stats())


# ----------------------------------------------------------------------
# maximum matching (blossom algorithm)

def _blossom_matching(g: Graph) -> tuple[list[int], int]:
    """Maximum matching; returns (mate array, augment-search count)."""
    n = g.n
    neighbors = [list(bits(g.adj[v])) for v in range(n)]
    mate = [-1] * n
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_blossom = [False] * n
    searches = 0

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        v = a
        while True:
            v = base[v]
            seen[v] = True
            if mate[v] == -1:
                break
            v = parent[mate[v]]
        v = b
        while True:
            v = base[v]
            if seen[v]:
                return v
            v = parent[mate[v]]

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_augmenting(root: int) -> int:
        for i in range(n):
            in_tree[i] = False
            parent[i] = -1
            base[i] = i
        in_tree[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in neighbors[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    for i in range(n):
                        in_blossom[i] = False
                    mark_path(v, cur, to)
                    mark_path(to, cur, v)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not in_tree[i]:
                                in_tree[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to
                    in_tree[mate[to]] = True
                    queue.append(mate[to])
        return -1

    for v in range(n):
        if mate[v] == -1:
            searches += 1
            end = find_augmenting(v)
            while end != -1:
                pv = parent[end]
                ppv = mate[pv]
                mate[end] = pv
                mate[pv] = end
                end = ppv
    return mate, searches


def max_matching(g: Graph) -> SolveResult:
    start = time.perf_counter()
    mate, searches = _blossom_matching(g)
    edges = tuple(sorted((v, mate[v]) for v in range(g.n) if mate[v] > v))
    cert = MatchingCertificate(edges)
    stats = SolveStats(searches, time.perf_counter() - start)
    return SolveResult(len(edges), cert, stats)


def is_factor_critical(g: Graph) -> bool:
    """Does deleting any one vertex leave a perfect matching?"""
    n = g.n
    if n == 0 or n % 2 == 0:
        return False
    target = (n - 1) // 2
    for v in range(n):
        rest = tuple(w for w in range(n) if w != v)
        if max_matching(g.induced_subgraph(rest)).value != target:
            return False
    return True


def is_theta_critical(g: Graph, budget: Budget | None = None) -> bool:
    """Does deleting any one vertex decrease the clique cover number?"""
    if g.n == 0:
        return False
    base = clique_cover_number(g, budget).value
    for v in range(g.n):
        rest = tuple(w for w in range(g.n) if w != v)
        if clique_cover_number(g.induced_subgraph(rest), budget).value >= base:
            return False
    return True


# ----------------------------------------------------------------------
# subset enumeration: deficiency and the one-third stability class

def _alpha_table(g: Graph) -> bytearray:
    """alpha of every vertex subset, bottom-up over the lowest vertex."""
    n = g.n
    adj = g.adj
    tab = bytearray(1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        v = low.bit_length() - 1
        skip = tab[m ^ low]
        take = 1 + tab[m & ~(adj[v] | low)]
        tab[m] = take if take > skip else skip
    return tab


def max_deficiency(g: Graph, budget: Budget | None = None) -> int:
    """max over induced subgraphs H of |V(H)| - 2 alpha(H), at least 0."""
    budget = budget or DEFAULT_BUDGET
    if g.n > budget.max_enum_vertices:
        raise UndecidedError(
            f"deficiency enumeration needs n <= {budget.max_enum_vertices}, got {g.n}"
        )
    tab = _alpha_table(g)
    best = 0
    for m in range(1 << g.n):
        d = m.bit_count() - 2 * tab[m]
        if d > best:
            best = d
    return best


@dataclass(frozen=True)
class ClassMembership:
    """Answer to: does every induced subgraph H have alpha(H) >= |V(H)|/3?

    status is "yes" (exhaustive scan), "yes-by-sufficiency" (3-colourable,
    which implies membership without a scan), or "no" with a witness
    vertex set violating the ratio.
    """

    status: str
    witness: tuple[int, ...] | None = None

    @property
    def is_member(self) -> bool:
        return self.status != "no"


def in_third_stability_class(
    g: Graph, budget: Budget | None = None
) -> ClassMembership:
    budget = budget or DEFAULT_BUDGET
    if g.n <= budget.max_enum_vertices:
        tab = _alpha_table(g)
        for m in range(1, 1 << g.n):
            if 3 * tab[m] < m.bit_count():
                return ClassMembership("no", tuple(bits(m)))
        return ClassMembership("yes")
    if chromatic_number(g, budget).value <= 3:
        return ClassMembership("yes-by-sufficiency")
    raise UndecidedError(
        f"membership needs an exhaustive scan (n <= {budget.max_enum_vertices}) "
        f"and the graph is not 3-colourable"
    )


# ----------------------------------------------------------------------
# constructive clique covers

def triangle_free_cover(g: Graph) -> CliqueCoverCertificate:
    """Optimal cover of a triangle-free graph: matched pairs + singletons.

    Size |V| - nu, which is the exact cover number when no triangle exists.
    """
    tri = g.find_triangle()
    if tri is not None:
        raise ValueError(f"graph has a triangle {tri}")
    mate, _ = _blossom_matching(g)
    parts: list[tuple[int, ...]] = []
    for v in range(g.n):
        if mate[v] == -1:
            parts.append((v,))
        elif mate[v] > v:
            parts.append((v, mate[v]))
    return CliqueCoverCertificate(tuple(sorted(parts)))


def neighborhood_partition_cover(
    g: Graph, budget: Budget | None = None
) -> CliqueCoverCertificate:
    """Valid (not necessarily optimal) cover by neighbourhood peeling.

    Pick a maximum stable set s_1 < ... < s_k; split the rest into blocks
    A_i = N(s_i) minus earlier blocks; cover each block recursively; s_i
    joins the first block clique it is fully adjacent to, else stands
    alone.  Regions of at most _COVER_BASE_SIZE vertices are covered
    exactly.
    """
    budget = budget or DEFAULT_BUDGET
    masks = _cover_region(g, (1 << g.n) - 1, budget)
    return cover_from_masks(masks)


def _cover_region(g: Graph, region: int, budget: Budget) -> list[int]:
    if region == 0:
        return []
    verts = tuple(bits(region))
    sub = g.induced_subgraph(verts)
    if len(verts) <= _COVER_BASE_SIZE:
        exact = clique_cover_number(sub, budget)
        return [mask_of(verts[i] for i in part) for part in exact.certificate.cliques]
    stable = max_stable_set(sub, budget)
    s_verts = sorted(verts[i] for i in stable.certificate.vertices)
    s_mask = mask_of(s_verts)
    cover: list[int] = []
    assigned = 0
    for s in s_verts:
        block = g.adj[s] & region & ~s_mask & ~assigned
        assigned |= block
        if block == 0:
            cover.append(1 << s)
            continue
        block_cover = _cover_region(g, block, budget)
        for j, cl in enumerate(block_cover):
            if cl & ~g.adj[s] == 0:
                block_cover[j] = cl | (1 << s)
                break
        else:
            block_cover.append(1 << s)
        cover.extend(block_cover)
    return cover


def eventually_identity_bound(c: int, k: int) -> int:
    """Cover-size bound B(c, k): B(1, k) = k and
    B(c+1, k) = sum over j of B(c, k-j+1); B(2, k) = k(k+1)/2."""
    if c < 1:
        raise ValueError("threshold must be at least 1")
    if k < 0:
        raise ValueError("stability number must be nonnegative")
    row = list(range(k + 1))
    for _ in range(c - 1):
        acc = 0
        nxt = [0] * (k + 1)
        for i in range(1, k + 1):
            acc += row[i]
            nxt[i] = acc
        row = nxt
    return row[k]


# ----------------------------------------------------------------------
# convenience bundle

INVARIANT_NAMES = ("omega", "alpha", "chi", "theta", "nu")


def solve_all(g: Graph, budget: Budget | None = None) -> dict[str, SolveResult]:
    """All five invariants with certificates."""
    return {
        "omega": max_clique(g, budget),
        "alpha": max_stable_set(g, budget),
        "chi": chromatic_number(g, budget),
        "theta": clique_cover_number(g, budget),
        "nu": max_matching(g),
    }
