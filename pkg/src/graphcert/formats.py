"""Readers and writers for the graph6 and DIMACS edge formats.

graph6 is the compact one-line encoding used by the standard graph
enumeration tools; DIMACS ("p edge N M" header plus "e u v" lines,
1-based) is the human-readable interchange format.  Both directions are
bit-exact round trips.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Raised on malformed graph6 or DIMACS input."""


# ----------------------------------------------------------------------
# graph6

def _encode_vertex_count(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise FormatError(f"vertex count {n} not representable in graph6")


def _decode_vertex_count(text: str) -> tuple[int, int]:
    """Return (n, characters consumed)."""
    if not text:
        raise FormatError("empty graph6 string")
    c0 = ord(text[0]) - 63
    if c0 != 63:
        if not 0 <= c0 <= 62:
            raise FormatError(f"bad graph6 size byte {text[0]!r}")
        return c0, 1
    if len(text) >= 2 and ord(text[1]) - 63 == 63:
        chunk, used = text[2:8], 8
    else:
        chunk, used = text[1:4], 4
    if len(chunk) < used - (used // 4):  # 3 or 6 payload chars
        raise FormatError("truncated graph6 size field")
    n = 0
    for ch in chunk:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise FormatError(f"bad graph6 size byte {ch!r}")
        n = (n << 6) | val
    return n, used


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 line (no trailing newline)."""
    n = g.n
    out = [_encode_vertex_count(n)]
    word = 0
    filled = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            word = (word << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + word))
                word = 0
                filled = 0
    if filled:
        word <<= 6 - filled
        out.append(chr(63 + word))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line; padding bits must be zero."""
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    n, pos = _decode_vertex_count(text)
    if n > MAX_VERTICES:
        raise FormatError(f"graph6 vertex count {n} exceeds cap {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    body = text[pos:]
    if len(body) != (nbits + 5) // 6:
        raise FormatError(
            f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6}"
        )
    rows = [0] * n
    idx = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise FormatError(f"graph6 byte {ch!r} out of range")
        for b in range(5, -1, -1):
            bit = (val >> b) & 1
            if idx < nbits:
                if bit:
                    j = _column_of(idx)
                    i = idx - j * (j - 1) // 2
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise FormatError("nonzero padding bits in graph6 body")
            idx += 1
    return Graph(n, tuple(rows))


def _column_of(idx: int) -> int:
    # smallest j with j(j-1)/2 > idx, minus 1
    j = int((2 * idx) ** 0.5)
    while j * (j - 1) // 2 > idx:
        j -= 1
    while (j + 1) * j // 2 <= idx:
        j += 1
    return j


# ----------------------------------------------------------------------
# DIMACS edge format

def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    n = None
    expected = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise FormatError(f"line {lineno}: malformed header {line!r}")
            try:
                n, expected = int(fields[2]), int(fields[3])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: malformed header {line!r}") from exc
            if n < 0 or n > MAX_VERTICES:
                raise FormatError(f"line {lineno}: vertex count {n} out of range")
        elif fields[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise FormatError(f"line {lineno}: malformed edge {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: malformed edge {line!r}") from exc
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"line {lineno}: vertex index outside 1..{n}")
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(f"line {lineno}: unknown line {line!r}")
    if n is None:
        raise FormatError("missing problem line")
    if len(edges) != expected:
        raise FormatError(f"header announces {expected} edges, found {len(edges)}")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


# ----------------------------------------------------------------------
# generic reading

def read_graphs(text: str) -> list[Graph]:
    """Parse either a single DIMACS document or one graph6 string per line."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith(("c", "p ", "p\t")) or line == "p":
            return [parse_dimacs(text)]
        break
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]
