"""Multigraphs on dense integer vertex labels and the structural queries we need."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

MAX_CUTSET_EDGES = 24


class GraphError(ValueError):
    """Invalid graph construction or a query outside its domain."""


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Terminals:
    s: int
    t: int

    def __post_init__(self):
        if self.s == self.t:
            raise GraphError("terminals must be distinct")


@dataclass(frozen=True)
class Multigraph:
    """Vertices ``0..n-1`` and an edge multiset stored as a tuple of pairs.

    Each pair is normalised to ``(a, b)`` with ``a < b``; the position in
    ``edges`` is the edge's stable index.  Loops are rejected.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        norm = []
        for e in self.edges:
            a, b = e
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise GraphError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.append((a, b) if a < b else (b, a))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Multigraph":
        return cls(n, tuple((int(a), int(b)) for a, b in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def corank(self) -> int:
        return self.m - self.n + 1

    d = corank

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """``adj[v]`` lists ``(neighbor, edge_index)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (a, b) in enumerate(self.edges):
            adj[a].append((b, i))
            adj[b].append((a, i))
        return adj

    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))


def components(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Component label (smallest vertex of the component) for each vertex."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
    return [find(v) for v in range(n)]


def count_components(G: Multigraph) -> int:
    return len(set(components(G.n, G.edges)))


def is_connected(G: Multigraph) -> bool:
    if G.n <= 1:
        return True
    return count_components(G) == 1


def _require_connected(G: Multigraph) -> None:
    if not is_connected(G):
        raise DisconnectedGraphError("graph is not connected")


def bridges(G: Multigraph) -> set[int]:
    """Indices of edges whose removal disconnects ``G`` (Tarjan low-link)."""
    _require_connected(G)
    if G.n <= 1:
        return set()
    adj = G.adjacency()
    disc = [-1] * G.n
    low = [0] * G.n
    out: set[int] = set()
    timer = 0
    # iterative DFS; the parent *edge* is skipped so parallel edges are never bridges
    stack = [(0, -1, iter(adj[0]))]
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        v, via, it = stack[-1]
        advanced = False
        for w, ei in it:
            if ei == via:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, ei, iter(adj[w])))
                advanced = True
                break
            low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if stack:
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] > disc[u]:
                out.add(via)
    return out


def count_cutsets(G: Multigraph, i: int) -> int:
    """Number of ``i``-edge subsets whose removal disconnects ``G``.

    Enumerates the subsets directly, so it refuses graphs with more than
    ``MAX_CUTSET_EDGES`` edges.
    """
    _require_connected(G)
    if not 0 <= i <= G.m:
        raise GraphError(f"cutset size {i} outside 0..{G.m}")
    if G.m > MAX_CUTSET_EDGES:
        raise GraphError(f"cutset enumeration limited to m <= {MAX_CUTSET_EDGES}")
    if G.n <= 1:
        return 0
    edges = G.edges
    total = 0
    for removed in combinations(range(G.m), i):
        gone = set(removed)
        kept = [e for j, e in enumerate(edges) if j not in gone]
        if len(set(components(G.n, kept))) > 1:
            total += 1
    return total


def delete_edge(G: Multigraph, e: int) -> Multigraph:
    if not 0 <= e < G.m:
        raise GraphError(f"no edge with index {e}")
    return Multigraph(G.n, G.edges[:e] + G.edges[e + 1:])


def contract_edge(G: Multigraph, e: int) -> Multigraph:
    """Merge the endpoints of edge ``e``; resulting loops are dropped.

    The merged vertex takes the smaller label and higher labels shift down
    by one, so labels stay dense.
    """
    if not 0 <= e < G.m:
        raise GraphError(f"no edge with index {e}")
    a, b = G.edges[e]

    def relabel(v):
        if v == b:
            v = a
        return v - 1 if v > b else v

    out = []
    for x, y in G.edges:
        x, y = relabel(x), relabel(y)
        if x != y:
            out.append((x, y))
    return Multigraph(G.n - 1, tuple(out))


def edge_substitute(G: Multigraph, H: Multigraph, terminals: Terminals) -> Multigraph:
    """Replace every edge ``{a, b}`` (``a < b``) of ``G`` by a fresh copy of ``H``
    with ``terminals.s -> a`` and ``terminals.t -> b``."""
    u, v = terminals.s, terminals.t
    if not (0 <= u < H.n and 0 <= v < H.n):
        raise GraphError("terminals outside the gadget")
    if not is_connected(H):
        raise DisconnectedGraphError("gadget must be connected")
    inner = [w for w in range(H.n) if w not in (u, v)]
    k = len(inner)
    edges = []
    for idx, (a, b) in enumerate(G.edges):
        base = G.n + idx * k
        where = {u: a, v: b}
        for j, w in enumerate(inner):
            where[w] = base + j
        edges.extend((where[x], where[y]) for x, y in H.edges)
    return Multigraph(G.n + G.m * k, tuple(edges))


def edge_connectivity(G: Multigraph) -> int:
    """Minimum number of edges whose removal disconnects ``G``.

    Uses cutset enumeration for ``m <= MAX_CUTSET_EDGES`` and unit-capacity
    max-flow otherwise.
    """
    _require_connected(G)
    if G.n <= 1:
        return 0
    if G.m <= MAX_CUTSET_EDGES:
        for i in range(1, G.m + 1):
            if count_cutsets(G, i) > 0:
                return i
    return min_cut_value(G)


def min_cut_value(G: Multigraph) -> int:
    """Global minimum edge cut via ``n - 1`` max-flow computations from vertex 0."""
    _require_connected(G)
    if G.n <= 1:
        return 0
    return min(_max_flow(G, 0, t) for t in range(1, G.n))


def _max_flow(G: Multigraph, s: int, t: int) -> int:
    cap: dict[tuple[int, int], int] = {}
    nbrs: list[set[int]] = [set() for _ in range(G.n)]
    for a, b in G.edges:
        cap[a, b] = cap.get((a, b), 0) + 1
        cap[b, a] = cap.get((b, a), 0) + 1
        nbrs[a].add(b)
        nbrs[b].add(a)
    flow = 0
    while True:
        prev = {s: s}
        queue = [s]
        for x in queue:
            if x == t:
                break
            for y in nbrs[x]:
                if y not in prev and cap[x, y] > 0:
                    prev[y] = x
                    queue.append(y)
        if t not in prev:
            return flow
        y = t
        while y != s:
            x = prev[y]
            cap[x, y] -= 1
            cap[y, x] += 1
            y = x
        flow += 1
