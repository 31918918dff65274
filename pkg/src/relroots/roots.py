"""Reliability roots: root reports, nonreal-root certificates, gadget equations,
the K4-e branch and constructive witnesses for roots near a target."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .families import cycle, hk_gadget
from .graph import (
    MAX_CUTSET_EDGES,
    GraphError,
    Multigraph,
    Terminals,
    bridges,
    count_cutsets,
    edge_substitute,
    is_connected,
)
from .poly import (
    RatPoly,
    RealRoot,
    RootReport,
    count_distinct_real_roots,
    gcd,
    isolate_real_roots,
    rational_roots,
    root_report,
    squarefree_part,
)
from .reliability import forms, h_polynomial, reliability, split_reliability

DEFAULT_EPS = Fraction(1, 10**12)

# K4-e with u, v the nonadjacent pair
K4E_REL = RatPoly((1, -1)) ** 2 * RatPoly((1, 2, 1, -4))
K4E_SPLIT = RatPoly((1, -1)) ** 2 * RatPoly((0, 0, 2, 6))
BETA_CUBIC = RatPoly((1, 2, 5, 8))
BETA_APPROX = -0.5707202942

BRANCH_S_MIN = Fraction(-1, 2)
BRANCH_S_MAX = Fraction(-3, 20)


# -- root reports --------------------------------------------------------------------


@dataclass(frozen=True)
class ReliabilityRoots:
    """``Rel(G) = (1-q)^(n-1) h(q)``; ``report`` describes the roots of ``h``."""

    n: int
    m: int
    one_multiplicity: int
    h: RatPoly
    report: RootReport

    @property
    def real_rooted(self) -> bool:
        return self.report.real_rooted

    def to_json(self) -> dict:
        out = {"n": self.n, "m": self.m, "root_one_multiplicity": self.one_multiplicity,
               "h": self.h.to_json()}
        out.update({k: v for k, v in self.report.to_json().items() if k not in ("poly",)})
        return out


def reliability_roots(G: Multigraph, eps=DEFAULT_EPS, rel: RatPoly | None = None) -> ReliabilityRoots:
    h = h_polynomial(G, rel)
    return ReliabilityRoots(G.n, G.m, G.n - 1, h, root_report(h, eps))


# -- nonreal certificates ---------------------------------------------------------------


class Verdict(str, enum.Enum):
    CERTIFIED_NONREAL = "CertifiedNonreal"
    INCONCLUSIVE = "Inconclusive"
    NOT_APPLICABLE = "NotApplicable"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Certificate:
    n: int
    m: int
    d: int
    c1: int | None
    c2: int | None
    bound: Fraction | None
    f2_lead: Fraction | None
    verdict: Verdict

    def to_json(self) -> dict:
        def rat(x):
            return None if x is None else f"{x.numerator}/{x.denominator}"

        return {"n": self.n, "m": self.m, "d": self.d, "c1": self.c1, "c2": self.c2,
                "bound": rat(self.bound), "f2_lead": rat(self.f2_lead),
                "verdict": self.verdict.value}


def certify_nonreal(G: Multigraph, c1: int | None = None, c2: int | None = None) -> Certificate:
    """Nonreal-root certificate from bridge and 2-cutset counts.

    With corank ``d >= 2``, no bridges and ``c2 < m(n-1)/(2d)`` the third
    Sturm term of the reversed H-polynomial has leading coefficient
    ``((2c2 - n + 1)m - 2c2(n-1)) / d^2 < 0``, so ``h`` cannot be real-rooted.
    Precomputed ``c1``/``c2`` may be passed in to skip enumeration.
    """
    if not is_connected(G):
        raise GraphError("certificate needs a connected graph")
    n, m, d = G.n, G.m, G.corank
    if d < 2:
        return Certificate(n, m, d, None, None, None, None, Verdict.NOT_APPLICABLE)
    if c1 is None:
        c1 = len(bridges(G))
    if c2 is None:
        if G.m <= MAX_CUTSET_EDGES:
            c2 = count_cutsets(G, 2)
        else:
            c2 = forms(G, check_cutsets=False).c[2]
    bound = Fraction(m * (n - 1), 2 * d)
    f2_lead = Fraction((2 * c2 - n + 1) * m - 2 * c2 * (n - 1), d * d)
    ok = c1 == 0 and c2 < bound
    return Certificate(n, m, d, c1, c2, bound, f2_lead,
                       Verdict.CERTIFIED_NONREAL if ok else Verdict.INCONCLUSIVE)


def theta_real_rooted(l1: int, l2: int, l3: int) -> bool:
    """``l1 <= (sqrt(l3) - sqrt(l2))^2``, decided in integers."""
    if not 1 <= l1 <= l2 <= l3:
        raise ValueError("need 1 <= l1 <= l2 <= l3")
    lhs = l2 + l3 - l1  # compare with 2 sqrt(l2 l3); lhs >= l3 > 0 here
    return lhs >= 0 and lhs * lhs >= 4 * l2 * l3


# -- gadget equations ----------------------------------------------------------------


@dataclass(frozen=True)
class GadgetEquation:
    H: Multigraph
    terminals: Terminals
    s: Fraction
    split: RatPoly
    rel: RatPoly
    poly: RatPoly = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "poly", self.split - self.rel * self.s)

    def real_roots(self, eps=DEFAULT_EPS) -> list[RealRoot]:
        return isolate_real_roots(self.poly, eps)

    def to_json(self) -> dict:
        return {"n": self.H.n, "m": self.H.m, "terminals": [self.terminals.s, self.terminals.t],
                "s": f"{self.s.numerator}/{self.s.denominator}",
                "split": self.split.to_json(), "rel": self.rel.to_json(),
                "poly": self.poly.to_json()}


def gadget_equation(H: Multigraph, terminals: Terminals, s, split: RatPoly | None = None,
                    rel: RatPoly | None = None) -> GadgetEquation:
    """``splitRel(H; u, v) - s * Rel(H)`` as an exact polynomial."""
    s = Fraction(s)
    if split is None:
        split = split_reliability(H, terminals)
    if rel is None:
        rel = reliability(H)
    return GadgetEquation(H, terminals, s, split, rel)


MAX_SUBSTITUTED_EDGES = 2000


def verify_substitution_theorem(G: Multigraph, H: Multigraph, terminals: Terminals,
                                roots: list[Fraction] | None = None) -> bool:
    """Check that every solution of the gadget equation for each rational root
    ``r != 1`` of ``Rel(G)`` is a root of ``Rel(G[H]) * Rel(H)``.

    The check is exact: the squarefree gadget polynomial must divide the
    squarefree part of the product (compared through gcd degrees).
    """
    if roots is None:
        roots = [r for r in rational_roots(h_polynomial(G)) if r != 1]
    if not roots:
        raise GraphError("base graph has no rational reliability root other than 1")
    GH = edge_substitute(G, H, terminals)
    if GH.m > MAX_SUBSTITUTED_EDGES:
        raise GraphError(f"substituted graph too large (m = {GH.m})")
    rel_h = reliability(H)
    split_h = split_reliability(H, terminals)
    target = squarefree_part(reliability(GH) * rel_h)
    for r in roots:
        s = r / (1 - r)
        eq = gadget_equation(H, terminals, s, split_h, rel_h)
        if eq.poly.is_zero():
            return False
        sf = squarefree_part(eq.poly)
        if sf.degree < 1:
            continue
        if gcd(sf, target).degree != sf.degree:
            return False
    return True


# -- beta and the K4-e branch -------------------------------------------------------------


@dataclass(frozen=True)
class Beta:
    value: mpmath.mpf
    cubic: RatPoly
    root: RealRoot
    real_root_count: int

    def to_json(self) -> dict:
        return {"beta": f"{float(self.value):.10f}",
                "beta_digits": mpmath.nstr(self.value, 40),
                "cubic": self.cubic.to_json(),
                "interval": self.root.to_json()["interval"],
                "real_root_count": self.real_root_count}


def beta_radical(dps: int = 50) -> mpmath.mpf:
    """``C/12 - 23/(48 C) - 5/24`` with ``C = (3 sqrt(708) - 629/8)^(1/3)``."""
    with mpmath.workdps(dps):
        C = mpmath.cbrt(3 * mpmath.sqrt(708) - mpmath.mpf(629) / 8)
        return +(C / 12 - mpmath.mpf(23) / (48 * C) - mpmath.mpf(5) / 24)


def beta(eps=Fraction(1, 10**15)) -> Beta:
    """The radical value together with the Sturm-isolated root of ``8q^3+5q^2+2q+1``."""
    value = beta_radical()
    count = count_distinct_real_roots(BETA_CUBIC)
    (root,) = isolate_real_roots(BETA_CUBIC, eps)
    if count != 1 or abs(value - mpmath.mpf(root.lo.numerator) / root.lo.denominator) > 1e-10:
        raise AssertionError("beta radical disagrees with the cubic's real root")
    return Beta(value, BETA_CUBIC, root, count)


def branch_cubic(s) -> RatPoly:
    """``s(-4q^3 + q^2 + 2q + 1) - 6q^3 - 2q^2``."""
    s = Fraction(s)
    return RatPoly((s, 2 * s, s - 2, -4 * s - 6))


def branch_residual(s, q: float) -> float:
    s = float(s)
    return abs(s * (-4 * q**3 + q**2 + 2 * q + 1) - 6 * q**3 - 2 * q**2)


def branch_radical(s, dps: int = 50) -> mpmath.mpc:
    """Cardano's formula for the K4-e branch (principal branches throughout)."""
    with mpmath.workdps(dps):
        s = mpmath.mpf(Fraction(s).numerator) / Fraction(s).denominator
        disc = 112 * s**4 + 256 * s**3 + 143 * s**2 - 8 * s
        X = (12 * s + 18) * mpmath.sqrt(3) * mpmath.sqrt(disc) + 253 * s**3 + 624 * s**2 + 390 * s - 8
        C = mpmath.cbrt(X) if mpmath.im(X) == 0 and X >= 0 else X ** (mpmath.mpf(1) / 3)
        return +(((s - 2) * C + C**2 + (25 * s**2 + 32 * s + 4)) / ((12 * s + 18) * C))


@dataclass(frozen=True)
class BranchPoint:
    s: Fraction
    root: RealRoot
    n_real: int

    @property
    def q(self) -> float:
        return self.root.approx

    @property
    def residual(self) -> float:
        return branch_residual(self.s, self.q)


class BranchJumpError(RuntimeError):
    pass


def _branch_step(s: Fraction, prev: float | None, eps: Fraction) -> BranchPoint:
    roots = isolate_real_roots(branch_cubic(s), eps)
    if not roots:
        raise BranchJumpError(f"no real root at s = {s}")
    pick = roots[0] if prev is None else min(roots, key=lambda r: abs(r.approx - prev))
    return BranchPoint(s, pick, len(roots))


def k4e_branch(s_lo, s_hi, steps: int, eps=Fraction(1, 10**13)) -> list[BranchPoint]:
    """Trace the real solution ``q(s)`` of the K4-e gadget equation on a uniform
    grid of ``steps + 1`` points, continuing from ``q(-1/2) = beta`` by
    nearest-root selection."""
    s_lo, s_hi = Fraction(str(s_lo)) if isinstance(s_lo, float) else Fraction(s_lo), \
        Fraction(str(s_hi)) if isinstance(s_hi, float) else Fraction(s_hi)
    if not BRANCH_S_MIN <= s_lo < s_hi <= BRANCH_S_MAX:
        raise ValueError("need -1/2 <= s_lo < s_hi <= -0.15")
    if steps < 1:
        raise ValueError("steps must be positive")
    ds = (s_hi - s_lo) / steps
    limit = 20 * float(ds)
    prev = _branch_step(BRANCH_S_MIN, None, eps).q
    # walk in from the anchor when the grid starts right of it
    walk = max(ds, Fraction(1, 2000))
    s = BRANCH_S_MIN
    while s + walk < s_lo:
        s += walk
        prev = _branch_step(s, prev, eps).q
    out = []
    for i in range(steps + 1):
        pt = _branch_step(s_lo + i * ds, prev, eps)
        if out and abs(pt.q - prev) > limit:
            raise BranchJumpError(f"branch jumped by {abs(pt.q - prev):.3g} at s = {float(pt.s)}")
        out.append(pt)
        prev = pt.q
    return out


def branch_csv(points: list[BranchPoint]) -> str:
    lines = ["s,q"]
    lines += [f"{float(p.s):.12g},{p.q:.12g}" for p in points]
    return "\n".join(lines) + "\n"


def invert_branch(q_target, tol=Fraction(1, 10**12)) -> BranchPoint:
    """Find ``s`` in ``[-1/2, -0.15]`` with ``q(s) = q_target`` by bisection
    (``q`` increases with ``s`` on this range)."""
    q_target = Fraction(q_target)
    lo, hi = BRANCH_S_MIN, BRANCH_S_MAX
    q_lo = _branch_step(lo, None, tol).root
    q_hi = _branch_step(hi, None, tol).root
    if not q_lo.lo <= q_target <= q_hi.hi:
        raise ValueError("target outside the traced branch")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        (r,) = isolate_real_roots(branch_cubic(mid), tol / 16)
        if r.approx < q_target:
            lo = mid
        else:
            hi = mid
    return _branch_step(lo, float(q_target), tol / 16)


# -- constructive witnesses -----------------------------------------------------------------


@dataclass(frozen=True)
class Synthesis:
    target: Fraction
    eps: Fraction
    achieved: bool
    conditional: bool
    gap: float
    root: RealRoot | None
    graph: Multigraph | None = None
    base: str | None = None
    gadget: str | None = None
    s: Fraction | None = None
    note: str = ""

    def to_json(self) -> dict:
        def rat(x):
            return None if x is None else f"{x.numerator}/{x.denominator}"

        return {"target": rat(self.target), "eps": rat(self.eps), "achieved": self.achieved,
                "conditional": self.conditional, "gap": self.gap,
                "root": None if self.root is None else self.root.to_json(),
                "graph": None if self.graph is None else {"n": self.graph.n, "m": self.graph.m},
                "base": self.base, "gadget": self.gadget, "s": rat(self.s), "note": self.note}


def _pick_hk(target: Fraction, eps: Fraction, eta_max: int) -> tuple[int, int] | None:
    goal = -target
    for eta in range(3, eta_max + 1):
        best = min(range(1, eta - 1), key=lambda k: abs(Fraction(k, 2 * (eta - 1)) - goal))
        if abs(Fraction(best, 2 * (eta - 1)) - goal) <= eps / 2:
            return eta, best
    return None


def _nearest_root(poly: RatPoly, target: Fraction, eps: Fraction, width: Fraction) -> RealRoot | None:
    roots = isolate_real_roots(poly, width, lo=target - eps, hi=target + eps)
    roots = [r for r in roots if r.lo > target - eps and r.hi < target + eps]
    if not roots:
        return None
    return min(roots, key=lambda r: abs(r.approx - float(target)))


def synthesize_root_near(target, eps, guard=Fraction(1, 1000), eta_max: int = 200,
                         max_cycle: int = 512) -> Synthesis:
    """Build a graph with a real reliability root within ``eps`` of ``target``.

    For ``target`` in ``[-1/2, 0)`` the gadget ``H_{eta,k}`` whose split
    reliability has the simple root ``-k/(2(eta-1))`` is substituted into a
    cycle ``C_N``; ``N`` grows until the gadget equation at ``s = -1/N`` has a
    root in the window, and the root is then confirmed on ``Rel(C_N[H])``
    itself.  For ``target`` in ``(beta, -1/2)`` the K4-e branch is inverted;
    realising the resulting ``s`` needs a base multigraph with root
    ``s/(1+s)``, so that result is flagged conditional.
    """
    target, eps, guard = Fraction(target), Fraction(eps), Fraction(guard)
    if eps <= 0:
        raise ValueError("eps must be positive")
    beta_lo = isolate_real_roots(BETA_CUBIC, Fraction(1, 10**15))[0].hi
    if not beta_lo + guard <= target <= -guard:
        raise ValueError(f"target must lie in [beta + {guard}, -{guard}]")
    width = min(eps / 1000, Fraction(1, 10**9))
    if target >= Fraction(-1, 2):
        picked = _pick_hk(target, eps, eta_max)
        if picked is not None:
            return _synthesize_hk(target, eps, picked, width, max_cycle)
    return _synthesize_branch(target, eps, width)


def _synthesize_hk(target, eps, picked, width, max_cycle) -> Synthesis:
    eta, k = picked
    H, T = hk_gadget(eta, k)
    split_h = split_reliability(H, T)
    rel_h = reliability(H)

    def gadget_hit(N):
        eq = gadget_equation(H, T, Fraction(-1, N), split_h, rel_h)
        return _nearest_root(eq.poly, target, eps, width)

    N = 3
    while gadget_hit(N) is None:
        N *= 2
        if N > max_cycle:
            break
    if N > max_cycle:
        return Synthesis(target, eps, False, True, math.inf, None, gadget=f"hk:{eta},{k}",
                         note="cycle length cap reached before the gadget root entered the window")
    lo, hi = N // 2, N
    while hi - lo > 1 and lo >= 3:
        mid = (lo + hi) // 2
        if gadget_hit(mid) is None:
            lo = mid
        else:
            hi = mid
    for N in range(max(3, hi), max_cycle + 1):
        G = edge_substitute(cycle(N), H, T)
        root = _nearest_root(reliability(G), target, eps, width)
        if root is not None:
            return Synthesis(target, eps, True, False, abs(root.approx - float(target)), root,
                             graph=G, base=f"cycle:{N}", gadget=f"hk:{eta},{k}",
                             s=Fraction(-1, N), note="root isolated on Rel(C_N[H]) by Sturm bisection")
    return Synthesis(target, eps, False, True, math.inf, None, gadget=f"hk:{eta},{k}",
                     note="no verified root up to the cycle length cap")


def _synthesize_branch(target, eps, width) -> Synthesis:
    try:
        pt = invert_branch(target, min(width, Fraction(1, 10**12)))
    except ValueError:
        return Synthesis(target, eps, False, True, math.inf, None, gadget="k4e",
                         note="target outside the K4-e branch range")
    gap = abs(pt.q - float(target))
    return Synthesis(target, eps, gap < eps, True, gap, pt.root, graph=None, gadget="k4e",
                     s=pt.s, note="conditional on realising s = r/(1-r) by a multigraph root r")
