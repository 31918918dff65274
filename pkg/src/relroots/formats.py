"""Text formats: the ``n m`` edge list and graph6 (short form, n <= 62)."""

from __future__ import annotations

from typing import Iterator

from .graph import GraphError, Multigraph

GRAPH6_HEADER = ">>graph6<<"


class FormatError(GraphError):
    pass


def parse_edge_list(text: str) -> Multigraph:
    """First line ``n m``, then exactly ``m`` lines ``a b``; blank lines are ignored.

    Repeated lines give parallel edges.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"header must be integers, got {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise FormatError("n and m must be nonnegative")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"malformed edge line {ln!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"malformed edge line {ln!r}") from exc
        if a == b:
            raise FormatError(f"loop in edge line {ln!r}")
        if not (0 <= a < n and 0 <= b < n):
            raise FormatError(f"endpoint out of range in {ln!r}")
        edges.append((a, b))
    return Multigraph(n, tuple(edges))


def format_edge_list(G: Multigraph) -> str:
    return "\n".join([f"{G.n} {G.m}"] + [f"{a} {b}" for a, b in G.edges]) + "\n"


def parse_graph6(text: str) -> Multigraph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise FormatError(f"invalid graph6 character {ch!r}")
        vals.append(v)
    n = vals[0]
    if n == 63:
        raise FormatError("only the short graph6 form (n <= 62) is supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    data = vals[1:]
    if len(data) != need:
        raise FormatError(f"graph6 body has {len(data)} bytes, expected {need}")
    bits = []
    for v in data:
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    edges = []
    pos = 0
    # column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Multigraph(n, tuple(edges))


def to_graph6(G: Multigraph) -> str:
    if not G.is_simple():
        raise FormatError("graph6 encodes simple graphs only")
    if G.n > 62:
        raise FormatError("only the short graph6 form (n <= 62) is supported")
    present = set(G.edges)
    bits = [1 if (i, j) in present else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(G.n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def read_graph_text(text: str) -> Multigraph:
    """Edge list when the first non-blank character is a digit, graph6 otherwise."""
    stripped = text.lstrip()
    if not stripped:
        raise FormatError("no graph on input")
    if stripped[0].isdigit():
        return parse_edge_list(stripped)
    return parse_graph6(stripped.splitlines()[0])


def iter_graph6(lines) -> Iterator[Multigraph]:
    for ln in lines:
        ln = ln.strip()
        if ln:
            yield parse_graph6(ln)
