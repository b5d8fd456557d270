"""Certificates for optimisation answers, checkable from definitions alone.

Every verifier here touches only the graph's edge relation; none of the
search code is shared with the solvers, so a passing check is an
independent confirmation of the claimed value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import Graph, bits, mask_of


@dataclass(frozen=True)
class StableSetCertificate:
    """Pairwise non-adjacent vertex set witnessing a lower bound on alpha."""

    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CliqueCertificate:
    """Pairwise adjacent vertex set witnessing a lower bound on omega."""

    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ColoringCertificate:
    """Partition into stable classes witnessing an upper bound on chi."""

    classes: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class CliqueCoverCertificate:
    """Partition into cliques witnessing an upper bound on theta."""

    cliques: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.cliques)


@dataclass(frozen=True)
class MatchingCertificate:
    """Vertex-disjoint edge set witnessing a lower bound on nu."""

    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)


Certificate = (
    StableSetCertificate
    | CliqueCertificate
    | ColoringCertificate
    | CliqueCoverCertificate
    | MatchingCertificate
)

_KIND_BY_TYPE = {
    StableSetCertificate: "stable-set",
    CliqueCertificate: "clique",
    ColoringCertificate: "coloring",
    CliqueCoverCertificate: "clique-cover",
    MatchingCertificate: "matching",
}


def _check_vertices(g: Graph, vertices: tuple[int, ...]) -> bool:
    seen: set[int] = set()
    for v in vertices:
        if not 0 <= v < g.n or v in seen:
            return False
        seen.add(v)
    return True


def _is_stable(g: Graph, vertices: tuple[int, ...]) -> bool:
    m = mask_of(vertices)
    return all(g.adj[v] & m == 0 for v in vertices)


def _is_clique(g: Graph, vertices: tuple[int, ...]) -> bool:
    m = mask_of(vertices)
    return all(g.adj[v] & m == m & ~(1 << v) for v in vertices)


def _is_partition(g: Graph, parts: tuple[tuple[int, ...], ...]) -> bool:
    covered = 0
    for part in parts:
        if not part or not _check_vertices(g, part):
            return False
        m = mask_of(part)
        if covered & m:
            return False
        covered |= m
    return covered == (1 << g.n) - 1


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    """Check a certificate against the bare edge relation of ``g``."""
    if isinstance(cert, StableSetCertificate):
        return _check_vertices(g, cert.vertices) and _is_stable(g, cert.vertices)
    if isinstance(cert, CliqueCertificate):
        return _check_vertices(g, cert.vertices) and _is_clique(g, cert.vertices)
    if isinstance(cert, ColoringCertificate):
        if g.n == 0:
            return cert.classes == ()
        return _is_partition(g, cert.classes) and all(
            _is_stable(g, part) for part in cert.classes
        )
    if isinstance(cert, CliqueCoverCertificate):
        if g.n == 0:
            return cert.cliques == ()
        return _is_partition(g, cert.cliques) and all(
            _is_clique(g, part) for part in cert.cliques
        )
    if isinstance(cert, MatchingCertificate):
        used = 0
        for edge in cert.edges:
            if len(edge) != 2:
                return False
            u, v = edge
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                return False
            m = (1 << u) | (1 << v)
            if used & m:
                return False
            used |= m
        return True
    raise TypeError(f"unknown certificate type {type(cert).__name__}")


def certificate_size(cert: Certificate) -> int:
    return cert.size


# ----------------------------------------------------------------------
# canonicalisation and JSON

def _canon_parts(parts: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(p)) for p in parts))


def canonical_certificate(cert: Certificate) -> Certificate:
    """Sort members so equal certificates serialise identically."""
    if isinstance(cert, StableSetCertificate):
        return StableSetCertificate(tuple(sorted(cert.vertices)))
    if isinstance(cert, CliqueCertificate):
        return CliqueCertificate(tuple(sorted(cert.vertices)))
    if isinstance(cert, ColoringCertificate):
        return ColoringCertificate(_canon_parts(cert.classes))
    if isinstance(cert, CliqueCoverCertificate):
        return CliqueCoverCertificate(_canon_parts(cert.cliques))
    if isinstance(cert, MatchingCertificate):
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in cert.edges))
        return MatchingCertificate(edges)
    raise TypeError(f"unknown certificate type {type(cert).__name__}")


def certificate_to_json(cert: Certificate) -> dict:
    cert = canonical_certificate(cert)
    kind = _KIND_BY_TYPE[type(cert)]
    if isinstance(cert, (StableSetCertificate, CliqueCertificate)):
        return {"kind": kind, "vertices": list(cert.vertices)}
    if isinstance(cert, ColoringCertificate):
        return {"kind": kind, "classes": [list(p) for p in cert.classes]}
    if isinstance(cert, CliqueCoverCertificate):
        return {"kind": kind, "cliques": [list(p) for p in cert.cliques]}
    return {"kind": kind, "edges": [list(e) for e in cert.edges]}


def certificate_from_json(data: dict) -> Certificate:
    kind = data.get("kind")
    if kind == "stable-set":
        return StableSetCertificate(tuple(data["vertices"]))
    if kind == "clique":
        return CliqueCertificate(tuple(data["vertices"]))
    if kind == "coloring":
        return ColoringCertificate(tuple(tuple(p) for p in data["classes"]))
    if kind == "clique-cover":
        return CliqueCoverCertificate(tuple(tuple(p) for p in data["cliques"]))
    if kind == "matching":
        return MatchingCertificate(tuple((e[0], e[1]) for e in data["edges"]))
    raise ValueError(f"unknown certificate kind {kind!r}")


def certificate_to_text(cert: Certificate) -> str:
    return json.dumps(certificate_to_json(cert), sort_keys=True, separators=(",", ":"))


def coloring_from_assignment(colors: list[int]) -> ColoringCertificate:
    """Build a coloring certificate from a per-vertex colour list."""
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    classes = tuple(tuple(by_color[c]) for c in sorted(by_color))
    return ColoringCertificate(classes)


def cover_from_masks(masks: list[int]) -> CliqueCoverCertificate:
    return CliqueCoverCertificate(tuple(tuple(bits(m)) for m in masks))
