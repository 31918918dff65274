"""All-terminal reliability, split reliability and the F/H/cutset forms.

Internally every polynomial is a tuple of Python ints (index = power of q);
reliability polynomials of graphs always have integer coefficients.  Public
functions return :class:`~relroots.poly.RatPoly`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .graph import (
    MAX_CUTSET_EDGES,
    DisconnectedGraphError,
    GraphError,
    Multigraph,
    Terminals,
    bridges,
    count_cutsets,
    is_connected,
)
from .poly import RatPoly

MAX_BRUTEFORCE_EDGES = 24
MAX_VERTEX_SUBSET_ORDER = 16

IntPoly = tuple  # tuple[int, ...]

_ONE: IntPoly = (1,)
_ZERO: IntPoly = ()


# -- integer polynomial helpers ----------------------------------------------------


def _trim(c: list[int]) -> IntPoly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _add(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _sub(a: IntPoly, b: IntPoly) -> IntPoly:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return _ZERO
    if len(a) == 1:
        return _trim([a[0] * x for x in b])
    if len(b) == 1:
        return _trim([b[0] * x for x in a])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _pow(a: IntPoly, k: int) -> IntPoly:
    out = _ONE
    while k:
        if k & 1:
            out = _mul(out, a)
        a = _mul(a, a)
        k >>= 1
    return out


_P: IntPoly = (1, -1)  # 1 - q
_F: IntPoly = (0, 1)  # q


def _from_counts(counts: list[int], m: int) -> IntPoly:
    """``sum_j counts[j] (1-q)^j q^(m-j)``."""
    out = [0] * (m + 1)
    # (1-q)^j q^(m-j): binomial expansion, coefficient of q^(m-j+i) is C(j,i)(-1)^i
    for j, cnt in enumerate(counts):
        if not cnt:
            continue
        for i in range(j + 1):
            out[m - j + i] += cnt * comb(j, i) * (-1) ** i
    return _trim(out)


def _divide_by_one_minus_q(a: IntPoly, times: int) -> IntPoly:
    c = list(a)
    for _ in range(times):
        # a(q) = (1-q) b(q)  =>  b_i = a_0 + ... + a_i; remainder must vanish
        acc = 0
        b = []
        for x in c[:-1]:
            acc += x
            b.append(acc)
        if acc + (c[-1] if c else 0) != 0:
            raise ArithmeticError("polynomial is not divisible by (1 - q)")
        c = b
    return _trim(c)


def _ratpoly(a: IntPoly) -> RatPoly:
    return RatPoly(a)


def _to_int(p: RatPoly) -> IntPoly:
    if any(c.denominator != 1 for c in p.coeffs):
        raise ValueError("expected an integer polynomial")
    return tuple(int(c) for c in p.coeffs)


def _require_connected(G: Multigraph) -> None:
    if not is_connected(G):
        raise DisconnectedGraphError("reliability is defined for connected graphs only")


# -- brute force ------------------------------------------------------------------


def _subset_counts(G: Multigraph, accept_two: Terminals | None = None) -> list[int]:
    """Counts by size of the operational edge sets that are accepted.

    ``accept_two=None``: spanning subgraph connected.  Otherwise: exactly two
    components with ``s`` and ``t`` on different sides.  Plain include/exclude
    enumeration with component labels; branches that cannot succeed are cut
    and branches whose outcome no longer depends on the remaining edges are
    counted in closed form.
    """
    n, m, edges = G.n, G.m, G.edges
    counts = [0] * (m + 1)
    target = 1 if accept_two is None else 2

    def free_count(size, k):
        for j in range(k + 1):
            counts[size + j] += comb(k, j)

    def rec(i: int, comp: list[int], ncomp: int, size: int) -> None:
        if accept_two is not None and comp[accept_two.s] == comp[accept_two.t]:
            return
        if ncomp == target:
            if target == 1:
                free_count(size, m - i)
            else:
                # edges across the two sides must stay down, the rest are free
                inside = sum(1 for a, b in edges[i:] if comp[a] == comp[b])
                free_count(size, inside)
            return
        if ncomp - target > m - i:
            return
        a, b = edges[i]
        ca, cb = comp[a], comp[b]
        rec(i + 1, comp, ncomp, size)
        if ca == cb:
            rec(i + 1, comp, ncomp, size + 1)
        else:
            merged = [ca if c == cb else c for c in comp]
            rec(i + 1, merged, ncomp - 1, size + 1)

    if n == 1:
        counts = [comb(m, j) for j in range(m + 1)] if accept_two is None else counts
        return counts
    rec(0, list(range(n)), n, 0)
    return counts


def reliability_bruteforce(G: Multigraph) -> RatPoly:
    """Sum over connected spanning edge sets ``E'`` of ``(1-q)^|E'| q^(m-|E'|)``."""
    _require_connected(G)
    if G.m > MAX_BRUTEFORCE_EDGES:
        raise GraphError(f"brute force limited to m <= {MAX_BRUTEFORCE_EDGES}")
    return _ratpoly(_from_counts(_subset_counts(G), G.m))


def split_reliability(G: Multigraph, terminals: Terminals) -> RatPoly:
    """Probability that the operational subgraph has exactly two components,
    one containing ``s`` and the other ``t`` (brute force)."""
    _require_connected(G)
    if G.m > MAX_BRUTEFORCE_EDGES:
        raise GraphError(f"split reliability limited to m <= {MAX_BRUTEFORCE_EDGES}")
    s, t = terminals.s, terminals.t
    if not (0 <= s < G.n and 0 <= t < G.n):
        raise GraphError("terminal outside the graph")
    return _ratpoly(_from_counts(_subset_counts(G, terminals), G.m))


# -- deletion-contraction ---------------------------------------------------------

# An edge carries (up, down) weight polynomials.  Reliability is multilinear in
# them: Rel = sum over connected states of prod(up) * prod(down), which lets
# series and parallel reductions stay polynomial without division.

Weights = tuple  # (IntPoly up, IntPoly down)
WEdges = dict  # {(a, b): Weights} with a < b, parallel edges merged


def _parallel(w1: Weights, w2: Weights) -> Weights:
    p1, f1 = w1
    p2, f2 = w2
    return _add(_mul(p1, p2), _add(_mul(p1, f2), _mul(f1, p2))), _mul(f1, f2)


def _series(w1: Weights, w2: Weights) -> Weights:
    p1, f1 = w1
    p2, f2 = w2
    return _mul(p1, p2), _add(_mul(p1, f2), _mul(f1, p2))


def _put(E: WEdges, a: int, b: int, w: Weights) -> None:
    key = (a, b) if a < b else (b, a)
    old = E.get(key)
    E[key] = w if old is None else _parallel(old, w)


def _remove_vertex(n: int, E: WEdges, v: int) -> tuple[int, WEdges]:
    out = {}
    for (a, b), w in E.items():
        a2 = a - 1 if a > v else a
        b2 = b - 1 if b > v else b
        out[a2, b2] = w
    return n - 1, out


def _contract(n: int, E: WEdges, a: int, b: int) -> tuple[int, WEdges]:
    """Merge ``b`` into ``a`` (edge ``{a, b}`` itself disappears)."""
    out: WEdges = {}
    for (x, y), w in E.items():
        if {x, y} == {a, b}:
            continue
        x = a if x == b else x
        y = a if y == b else y
        x = x - 1 if x > b else x
        y = y - 1 if y > b else y
        _put(out, x, y, w)
    return n - 1, out


def _neighbors(n: int, E: WEdges) -> list[list[int]]:
    nb: list[list[int]] = [[] for _ in range(n)]
    for a, b in E:
        nb[a].append(b)
        nb[b].append(a)
    return nb


def _connected(n: int, E: WEdges) -> bool:
    nb = _neighbors(n, E)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in nb[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _reduce(n: int, E: WEdges) -> tuple[IntPoly, int, WEdges]:
    """Strip pendant vertices, series vertices and bridges; returns the factor
    taken out and the reduced graph."""
    factor = _ONE
    while True:
        if n <= 2:
            return factor, n, E
        nb = _neighbors(n, E)
        changed = False
        for v in range(n):
            if len(nb[v]) == 1:
                w = nb[v][0]
                factor = _mul(factor, E[(v, w) if v < w else (w, v)][0])
                n, E = _remove_vertex(n, {k: x for k, x in E.items() if v not in k}, v)
                changed = True
                break
            if len(nb[v]) == 2:
                x, y = nb[v]
                w1 = E[(v, x) if v < x else (x, v)]
                w2 = E[(v, y) if v < y else (y, v)]
                E2 = {k: z for k, z in E.items() if v not in k}
                _put(E2, x, y, _series(w1, w2))
                n, E = _remove_vertex(n, E2, v)
                changed = True
                break
        if changed:
            continue
        keys = list(E)
        bs = bridges(Multigraph(n, tuple(keys)))
        if not bs:
            return factor, n, E
        a, b = keys[min(bs)]
        factor = _mul(factor, E[a, b][0])
        n, E = _contract(n, E, a, b)


def _rel_dc(n: int, E: WEdges, memo: dict) -> IntPoly:
    if n == 1:
        return _ONE
    if not _connected(n, E):
        return _ZERO
    factor, n, E = _reduce(n, E)
    if n == 1:
        return factor
    if n == 2:
        return _mul(factor, E[0, 1][0])
    key = (n, tuple(sorted(E.items())))
    hit = memo.get(key)
    if hit is None:
        nb = _neighbors(n, E)
        v = min(range(n), key=lambda x: (len(nb[x]), x))
        w = min(nb[v], key=lambda x: (len(nb[x]), x))
        e = (v, w) if v < w else (w, v)
        up, down = E[e]
        n1, E1 = _contract(n, E, *e)
        E2 = dict(E)
        del E2[e]
        hit = _add(_mul(up, _rel_dc(n1, E1, memo)), _mul(down, _rel_dc(n, E2, memo)))
        memo[key] = hit
    return _mul(factor, hit)


def _weighted(G: Multigraph) -> WEdges:
    E: WEdges = {}
    for a, b in G.edges:
        _put(E, a, b, (_P, _F))
    return E


def reliability(G: Multigraph, memo: dict | None = None) -> RatPoly:
    """All-terminal reliability by deletion-contraction.

    Pendant edges and bridges are factored out, parallel edges merged and
    degree-2 vertices series-reduced before each branching step.  ``memo``
    may be shared across calls from one thread; by default each call uses a
    private table.
    """
    _require_connected(G)
    return _ratpoly(_rel_int(G, memo))


def _rel_int(G: Multigraph, memo: dict | None = None) -> IntPoly:
    if G.n <= 1:
        return _ONE
    return _rel_dc(G.n, _weighted(G), {} if memo is None else memo)


def connected_subgraph_counts(G: Multigraph) -> list[int]:
    """``counts[j]`` = number of connected spanning subgraphs with ``j`` edges.

    Recursion over vertex subsets containing vertex 0: every edge set inside
    ``S`` splits into the component of the smallest vertex and an arbitrary
    edge set on the rest.  Generating functions in ``x`` are packed into
    single Python ints (slot width ``m + 1`` bits), which is safe because
    every intermediate coefficient is bounded by ``2**m``.
    """
    n, m = G.n, G.m
    if n > MAX_VERTEX_SUBSET_ORDER:
        raise GraphError(f"vertex-subset recursion limited to n <= {MAX_VERTEX_SUBSET_ORDER}")
    if n == 1:
        return [comb(m, j) for j in range(m + 1)]
    width = m + 1
    X = 1 << width
    mult = [[0] * n for _ in range(n)]
    for a, b in G.edges:
        mult[a][b] += 1
        mult[b][a] += 1
    full = (1 << n) - 1
    inside = [0] * (1 << n)
    for S in range(1, full + 1):
        low = (S & -S).bit_length() - 1
        rest = S & ~(1 << low)
        cnt = inside[rest]
        r = rest
        while r:
            v = (r & -r).bit_length() - 1
            cnt += mult[low][v]
            r &= r - 1
        inside[S] = cnt
    powA = [1]
    for _ in range(m):
        powA.append(powA[-1] * (1 + X))
    conn: dict[int, int] = {}
    # subsets containing vertex 0, in increasing order (subsets come first)
    for S in range(1, full + 1, 2):
        rest = S & ~1
        acc = powA[inside[S]]
        sub = rest
        while True:
            if sub != rest:
                T = sub | 1
                acc -= conn[T] * powA[inside[S & ~T]]
            if sub == 0:
                break
            sub = (sub - 1) & rest
        conn[S] = acc
    packed = conn[full]
    mask = X - 1
    out = []
    for _ in range(m + 1):
        out.append(packed & mask)
        packed >>= width
    return out


def reliability_vertex_subsets(G: Multigraph) -> RatPoly:
    """Same polynomial as :func:`reliability`, via :func:`connected_subgraph_counts`."""
    _require_connected(G)
    return _ratpoly(_from_counts(connected_subgraph_counts(G), G.m))


# -- closed forms ------------------------------------------------------------------


def hk_split_closed_form(eta: int, k: int) -> RatPoly:
    """``q (1-q)^(2eta-k-3) (1+2q)^(eta-k-2) (k + 2(eta-1) q)``."""
    if eta < 3 or not 1 <= k <= eta - 2:
        raise GraphError("need eta >= 3 and 1 <= k <= eta - 2")
    poly = _mul(_F, _pow(_P, 2 * eta - k - 3))
    poly = _mul(poly, _pow((1, 2), eta - k - 2))
    poly = _mul(poly, (k, 2 * (eta - 1)))
    return _ratpoly(poly)


def _complete_int(n: int) -> list[IntPoly]:
    P: list[IntPoly] = [_ZERO, _ONE]
    for size in range(2, n + 1):
        acc = _ONE
        for k in range(1, size):
            term = _mul(P[k], (0,) * (k * (size - k)) + (comb(size - 1, k - 1),))
            acc = _sub(acc, term)
        P.append(acc)
    return P


def complete_graph_reliability(n: int) -> RatPoly:
    """Reliability of K_n from the connectivity recursion
    ``P_n = 1 - sum_k C(n-1, k-1) P_k q^(k(n-k))``."""
    if not 2 <= n <= 14:
        raise GraphError("complete_graph_reliability needs 2 <= n <= 14")
    return _ratpoly(_complete_int(n)[n])


# -- forms -------------------------------------------------------------------------


@dataclass(frozen=True)
class RelForms:
    n: int
    m: int
    d: int
    rel: RatPoly
    F: tuple[int, ...]
    H: tuple[int, ...]
    c: tuple[int, ...]

    @property
    def h(self) -> RatPoly:
        return RatPoly(self.H)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "rel": self.rel.to_json(),
            "F": list(self.F),
            "H": list(self.H),
            "c": list(self.c),
        }


def h_to_f(H, d: int) -> list[int]:
    """``F_k = sum_{r<=k} H_r C(d-r, k-r)``."""
    return [sum(H[r] * comb(d - r, k - r) for r in range(k + 1)) for k in range(d + 1)]


def f_to_h(F, d: int) -> list[int]:
    """Inverse of :func:`h_to_f` (triangular solve)."""
    H: list[int] = []
    for k in range(d + 1):
        H.append(F[k] - sum(H[r] * comb(d - r, k - r) for r in range(k)))
    return H


def h_polynomial(G: Multigraph, rel: RatPoly | None = None) -> RatPoly:
    """``Rel(G) / (1-q)^(n-1)`` (exact)."""
    _require_connected(G)
    ints = _to_int(rel) if rel is not None else _rel_int(G)
    return _ratpoly(_divide_by_one_minus_q(ints, G.n - 1))


# count_cutsets is cross-checked only where the enumeration stays this small
CUTSET_CHECK_BUDGET = 50_000


def forms(G: Multigraph, rel: RatPoly | None = None, check_cutsets: bool = True) -> RelForms:
    """Coefficient, F-, H- and cutset forms of ``Rel(G)``.

    ``rel`` may be supplied when already known.  With ``check_cutsets`` the
    derived ``c_i`` are compared against direct enumeration for every ``i``
    whose enumeration has at most ``CUTSET_CHECK_BUDGET`` subsets.
    """
    _require_connected(G)
    n, m, d = G.n, G.m, G.corank
    if rel is None:
        rel = reliability(G)
    try:
        H = list(_divide_by_one_minus_q(_to_int(rel), n - 1))
    except ArithmeticError as exc:
        raise AssertionError(f"Rel(G) not divisible by (1-q)^{n - 1}: engine bug") from exc
    H += [0] * (d + 1 - len(H))
    if len(H) != d + 1:
        raise AssertionError("H-polynomial degree exceeds the corank: engine bug")
    F = h_to_f(H, d)
    c = [comb(m, i) - F[i] if i <= d else comb(m, i) for i in range(m + 1)]
    if check_cutsets and m <= MAX_CUTSET_EDGES:
        for i in range(m + 1):
            if comb(m, i) <= CUTSET_CHECK_BUDGET and count_cutsets(G, i) != c[i]:
                raise AssertionError(f"cutset count mismatch at i={i}: engine bug")
    return RelForms(n, m, d, rel, tuple(F), tuple(H), tuple(c))


def h2_formula(n: int, m: int, d: int, c2: int) -> Fraction:
    """``H_2 = C(m,2) - c_2 - (d-1)(n-1) - C(d,2)`` (needs ``d >= 2``)."""
    if d < 2:
        raise ValueError("H_2 formula needs corank d >= 2")
    return Fraction(comb(m, 2) - c2 - (d - 1) * (n - 1) - comb(d, 2))


def is_unimodal(seq) -> bool:
    i, k = 0, len(seq)
    while i + 1 < k and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < k and seq[i] >= seq[i + 1]:
        i += 1
    return i + 1 >= k
