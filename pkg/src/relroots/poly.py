"""Exact univariate polynomials over the rationals, Sturm sequences and root finding.

Polynomials are dense: ``coeffs[i]`` is the coefficient of ``q**i``.  All
arithmetic is exact (``fractions.Fraction``); only :func:`complex_roots`
works in floating point.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence


class PolynomialError(ValueError):
    """Raised for inexact division, zero divisors and similar misuse."""


class ConvergenceError(RuntimeError):
    """Raised when the complex root iteration does not reach its tolerance."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        # Exact binary value; callers wanting decimal semantics pass strings.
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class RatPoly:
    """Immutable dense polynomial in ``q`` with exact rational coefficients.

    The zero polynomial has no coefficients and ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def constant(cls, c) -> "RatPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "RatPoly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "RatPoly":
        out = cls.constant(lead)
        for r in roots:
            out = out * cls((-_frac(r), 1))
        return out

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- evaluation ----------------------------------------------------

    def __call__(self, x):
        """Horner evaluation; exact for rationals, floating for float/complex."""
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        acc = 0.0 if not isinstance(x, complex) else 0j
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def sign_at(self, x) -> int:
        """Sign of the polynomial at ``x``; ``x`` may be ``±math.inf``."""
        if not self.coeffs:
            return 0
        if isinstance(x, float) and math.isinf(x):
            s = 1 if self.lead > 0 else -1
            if x < 0 and self.degree % 2 == 1:
                s = -s
            return s
        v = self(_frac(x))
        return (v > 0) - (v < 0)

    # -- ring operations -----------------------------------------------

    def _coerce(self, other) -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly.constant(other)
        return NotImplemented

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __add__(self, other) -> "RatPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "RatPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RatPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly(c * other for c in self.coeffs)
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RatPoly":
        if k < 0:
            raise ValueError("negative exponent")
        out = RatPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other) -> tuple["RatPoly", "RatPoly"]:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return divide(self, other)

    def __floordiv__(self, other) -> "RatPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "RatPoly":
        return divmod(self, other)[1]

    # -- misc ------------------------------------------------------------

    def derivative(self) -> "RatPoly":
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monic(self) -> "RatPoly":
        if not self.coeffs:
            raise PolynomialError("zero polynomial has no monic form")
        return self * (1 / self.lead)

    def shift(self, k: int) -> "RatPoly":
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        return RatPoly([0] * k + list(self.coeffs))

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "RatPoly":
        return cls(Fraction(s) for s in data)

    def to_floats(self) -> list[float]:
        return [float(c) for c in self.coeffs]


Q = RatPoly((0, 1))
ONE = RatPoly.constant(1)


def divide(f: RatPoly, g: RatPoly) -> tuple[RatPoly, RatPoly]:
    """Euclidean division ``f = quot*g + rem`` with ``deg rem < deg g``."""
    if g.is_zero():
        raise PolynomialError("division by the zero polynomial")
    rem = list(f.coeffs)
    dg = g.degree
    if len(rem) - 1 < dg:
        return RatPoly(), f
    inv = 1 / g.lead
    gc = g.coeffs
    quot = [Fraction(0)] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        t = c * inv
        quot[k - dg] = t
        for j in range(dg + 1):
            rem[k - dg + j] -= t * gc[j]
    return RatPoly(quot), RatPoly(rem[:dg])


def remainder(f: RatPoly, g: RatPoly) -> RatPoly:
    return divide(f, g)[1]


def exact_div(f: RatPoly, g: RatPoly) -> RatPoly:
    quot, rem = divide(f, g)
    if not rem.is_zero():
        raise PolynomialError(f"{g} does not divide {f}")
    return quot


def derivative(f: RatPoly) -> RatPoly:
    return f.derivative()


def gcd(f: RatPoly, g: RatPoly) -> RatPoly:
    """Monic greatest common divisor; ``gcd(0, 0)`` is an error."""
    if f.is_zero() and g.is_zero():
        raise PolynomialError("gcd of two zero polynomials")
    a, b = _primitive(_int_scaled(f)), _primitive(_int_scaled(g))
    while b:
        a, b = b, _primitive(_prem(a, b))
    return RatPoly(a).monic()


def _primitive(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    g = 0
    for x in c:
        g = math.gcd(g, x)
    return tuple(x // g for x in c) if g > 1 else tuple(c)


def _prem(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Positive multiple of ``rem(a, b)`` over the integers (``b`` nonzero, trimmed)."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    steps = 0
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        r = [lb * x for x in r]
        if c:
            for j in range(db + 1):
                r[k - db + j] -= c * b[j]
        steps += 1
    out = r[:db]
    if lb < 0 and steps % 2:
        out = [-x for x in out]
    return tuple(out)


def squarefree_part(f: RatPoly) -> RatPoly:
    """``f / gcd(f, f')`` scaled to be monic up to the sign of ``lead(f)``."""
    if f.is_zero():
        raise PolynomialError("zero polynomial has no squarefree part")
    if f.degree == 0:
        return RatPoly.constant(1 if f.lead > 0 else -1)
    sf = exact_div(f, gcd(f, f.derivative())).monic()
    return sf if f.lead > 0 else -sf


def squarefree_decomposition(f: RatPoly) -> list[RatPoly]:
    """Yun's algorithm: monic squarefree ``g[0], g[1], ...`` with ``f ~ prod g[i]**(i+1)``.

    Entries may be the constant 1 when no root has that multiplicity.
    """
    if f.is_zero():
        raise PolynomialError("zero polynomial")
    if f.degree == 0:
        return []
    out = []
    a = gcd(f, f.derivative())
    b = exact_div(f, a)
    c = exact_div(f.derivative(), a)
    d = c - b.derivative()
    while b.degree > 0:
        g = gcd(b, d)
        out.append(g)
        b = exact_div(b, g)
        c = exact_div(d, g)
        d = c - b.derivative()
    return out


def reverse(f: RatPoly) -> RatPoly:
    """``q**deg(f) * f(1/q)``: the coefficient sequence read backwards."""
    if f.is_zero():
        raise PolynomialError("cannot reverse the zero polynomial")
    return RatPoly(reversed(f.coeffs))


# -- Sturm sequences ---------------------------------------------------------


def _int_scaled(f: RatPoly) -> tuple[int, ...]:
    """Positive multiple of ``f`` with integer coefficients (same signs everywhere)."""
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return tuple(int(c * den) for c in f.coeffs)


def _sign_int_at(coeffs: tuple[int, ...], num: int, den: int) -> int:
    # sign of sum c_i (num/den)^i with den > 0, evaluated as den^deg * f(num/den)
    acc = 0
    dpow = 1
    for c in reversed(coeffs):
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


@dataclass(frozen=True)
class SturmSeq:
    polys: tuple[RatPoly, ...]
    _scaled: tuple[tuple[int, ...], ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if not self._scaled:
            object.__setattr__(self, "_scaled", tuple(_int_scaled(p) for p in self.polys))

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, i: int) -> RatPoly:
        return self.polys[i]

    def signs_at(self, x) -> list[int]:
        if isinstance(x, float) and math.isinf(x):
            return [p.sign_at(x) for p in self.polys]
        x = _frac(x)
        return [_sign_int_at(c, x.numerator, x.denominator) for c in self._scaled]

    def variations(self, x) -> int:
        signs = [s for s in self.signs_at(x) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, a, b) -> int:
        """Distinct roots of ``polys[0]`` in ``(a, b]``."""
        return self.variations(a) - self.variations(b)


def sturm_sequence(f: RatPoly, exact: bool = True) -> SturmSeq:
    """``f, f', -rem(f, f'), ...`` ending at the last nonzero remainder.

    With ``exact=False`` each term is replaced by a positive primitive integer
    multiple (same sign pattern, much cheaper); use it for root counting only.
    """
    if f.is_zero() or f.degree < 1:
        raise PolynomialError("Sturm sequence needs a nonconstant polynomial")
    if not exact:
        a = _primitive(_int_scaled(f))
        b = _primitive(_int_scaled(f.derivative()))
        ints = [a, b]
        while True:
            r = _primitive(_prem(ints[-2], ints[-1]))
            if not r:
                break
            ints.append(tuple(-x for x in r))
        return SturmSeq(tuple(RatPoly(c) for c in ints), tuple(ints))
    seq = [f, f.derivative()]
    while True:
        r = remainder(seq[-2], seq[-1])
        if r.is_zero():
            break
        seq.append(-r)
    return SturmSeq(tuple(seq))


def _as_endpoint(x):
    if isinstance(x, float) and math.isinf(x):
        return x
    return _frac(x)


def count_distinct_real_roots(f: RatPoly, a=-math.inf, b=math.inf) -> int:
    """Number of distinct real roots of ``f`` in ``(a, b]``; ends may be ``±math.inf``."""
    if f.is_zero():
        raise PolynomialError("zero polynomial has infinitely many roots")
    a, b = _as_endpoint(a), _as_endpoint(b)
    if not a < b:
        raise ValueError("need a < b")
    sf = squarefree_part(f)
    if sf.degree < 1:
        return 0
    return sturm_sequence(sf, exact=False).count(a, b)


def is_real_rooted(f: RatPoly) -> bool:
    """True iff every complex root of ``f`` is real (multiplicities allowed)."""
    if f.is_zero():
        raise PolynomialError("zero polynomial")
    sf = squarefree_part(f)
    if sf.degree < 1:
        return True
    return sturm_sequence(sf, exact=False).count(-math.inf, math.inf) == sf.degree


def sturm_lead_criterion(f: RatPoly) -> bool:
    """Real-rootedness read off the Sturm sequence's leading coefficients.

    Valid for squarefree ``f`` with positive leading coefficient: every term
    must have positive leading coefficient and the degrees must drop by one
    at each step.
    """
    if f.is_zero():
        raise PolynomialError("zero polynomial")
    if f.degree < 1:
        return True
    seq = sturm_sequence(f)
    if any(p.lead <= 0 for p in seq.polys):
        return False
    return all(seq[i + 1].degree == seq[i].degree - 1 for i in range(len(seq) - 1))


# -- real root isolation -------------------------------------------------------


@dataclass(frozen=True)
class RealRoot:
    """Closed isolating interval ``[lo, hi]`` around one distinct real root."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def approx(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= _frac(x) <= self.hi

    def to_json(self) -> dict:
        return {
            "interval": [f"{self.lo.numerator}/{self.lo.denominator}",
                         f"{self.hi.numerator}/{self.hi.denominator}"],
            "multiplicity": self.multiplicity,
            "approx": self.approx,
        }


def cauchy_bound(f: RatPoly) -> Fraction:
    lead = abs(f.lead)
    return 1 + max((abs(c) / lead for c in f.coeffs[:-1]), default=Fraction(0))


def _rational_candidate(sturm: SturmSeq, sf_int: tuple[int, ...], lo: Fraction, hi: Fraction,
                        lead: int) -> tuple[Fraction, Fraction]:
    """Narrow ``(lo, hi]`` until it either pins a rational root with
    denominator dividing ``lead`` or provably excludes one."""
    # Rational roots of the primitive integer polynomial have the form k/lead.
    step = Fraction(1, abs(lead))
    while hi - lo >= step:
        mid = (lo + hi) / 2
        if _sign_int_at(sf_int, mid.numerator, mid.denominator) == 0:
            return mid, mid
        if sturm.count(lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    for k in {math.ceil(lo * abs(lead)), math.floor(hi * abs(lead))}:
        cand = Fraction(k, abs(lead))
        if lo <= cand <= hi and _sign_int_at(sf_int, cand.numerator, cand.denominator) == 0:
            return cand, cand
    return lo, hi


def isolate_real_roots(f: RatPoly, eps=Fraction(1, 10**12), lo=None, hi=None,
                       exact: bool = True) -> list[RealRoot]:
    """Disjoint isolating intervals of width ``<= eps`` for the distinct real roots.

    Roots are searched in ``(lo, hi]`` (default: the whole line via the
    Cauchy bound).  With ``exact=True`` every rational root is returned as a
    degenerate interval ``[r, r]``.  Multiplicities come from the squarefree
    decomposition.
    """
    if f.is_zero():
        raise PolynomialError("zero polynomial")
    eps = _frac(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if f.degree < 1:
        return []
    sf = squarefree_part(f)
    sturm = sturm_sequence(sf, exact=False)
    sf_int = _int_scaled(sf)
    bound = cauchy_bound(sf)
    a = -bound if lo is None else max(_frac(lo), -bound)
    b = bound if hi is None else min(_frac(hi), bound)
    if not a < b:
        return []

    found: list[tuple[Fraction, Fraction]] = []
    stack = [(a, b, sturm.count(a, b))]
    while stack:
        x, y, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            found.append((x, y))
            continue
        mid = (x + y) / 2
        left = sturm.count(x, mid)
        stack.append((mid, y, k - left))
        stack.append((x, mid, left))

    roots = []
    for x, y in sorted(found):
        if _sign_int_at(sf_int, y.numerator, y.denominator) == 0:
            roots.append((y, y))
            continue
        # the root now lies strictly inside (x, y)
        if exact:
            x, y = _rational_candidate(sturm, sf_int, x, y, sf_int[-1])
            if x == y:
                roots.append((x, y))
                continue
        while y - x > eps:
            mid = (x + y) / 2
            if _sign_int_at(sf_int, mid.numerator, mid.denominator) == 0:
                x = y = mid
                break
            if sturm.count(x, mid) == 1:
                y = mid
            else:
                x = mid
        roots.append((x, y))

    # closed intervals must not touch; roots sit strictly inside non-degenerate ones
    for i in range(len(roots) - 1):
        while roots[i][1] >= roots[i + 1][0]:
            roots[i] = _shrink(sturm, sf_int, *roots[i])
            roots[i + 1] = _shrink(sturm, sf_int, *roots[i + 1])

    factors = squarefree_decomposition(f)
    out = []
    for x, y in roots:
        out.append(RealRoot(x, y, _multiplicity(factors, x, y)))
    return out


def _shrink(sturm: SturmSeq, sf_int, x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
    if x == y:
        return x, y
    mid = (x + y) / 2
    if _sign_int_at(sf_int, mid.numerator, mid.denominator) == 0:
        return mid, mid
    return (x, mid) if sturm.count(x, mid) == 1 else (mid, y)


def _multiplicity(factors: list[RatPoly], x: Fraction, y: Fraction) -> int:
    for i, g in enumerate(factors):
        if g.degree < 1:
            continue
        if x == y:
            if g(x) == 0:
                return i + 1
        elif sturm_sequence(g, exact=False).count(x, y) == 1:
            return i + 1
    raise PolynomialError("root not found in squarefree decomposition")


def rational_roots(f: RatPoly) -> list[Fraction]:
    """All rational roots of ``f``, ascending."""
    return [r.lo for r in isolate_real_roots(f, exact=True) if r.exact]


# -- complex roots ------------------------------------------------------------


def complex_roots(f: RatPoly, eps: float = 1e-12, max_iter: int = 10_000) -> list[complex]:
    """All complex roots of ``f`` by Aberth-Ehrlich simultaneous iteration.

    Converged when every approximation has backward error
    ``|f(z)| / sum_i |a_i| |z|^i <= eps``.  Starting points lie on a circle
    beyond the Cauchy bound, so the result is deterministic.  For real
    input the output is conjugate-symmetric: the exact number of real roots
    (with multiplicity) is taken from the Sturm machinery and the
    approximations closest to the axis are snapped onto it.
    """
    if f.is_zero():
        raise PolynomialError("zero polynomial")
    if f.degree < 1:
        return []
    zeros = next(i for i, c in enumerate(f.coeffs) if c)
    if zeros:
        # exact roots at 0; the backward error is meaningless there
        rest = RatPoly(f.coeffs[zeros:])
        return [0j] * zeros + (complex_roots(rest, eps, max_iter) if rest.degree else [])
    n = f.degree
    a = [float(c) / float(f.lead) for c in f.coeffs]
    if any(math.isinf(c) or math.isnan(c) for c in a):
        # coefficients overflow float; rescale via exact monic form first
        mf = f.monic()
        a = [float(c) for c in mf.coeffs]
    radius = float(cauchy_bound(f)) * 1.1 + 0.1
    zs = [radius * cmath.exp(1j * (2 * math.pi * k / n + 0.4)) for k in range(n)]
    da = [i * a[i] for i in range(1, n + 1)]
    absa = [abs(c) for c in a]

    def backward_error(z: complex) -> float:
        num = 0j
        den = 0.0
        az = abs(z)
        for c, ac in zip(reversed(a), reversed(absa)):
            num = num * z + c
            den = den * az + ac
        return abs(num) / den if den else abs(num)

    done = [False] * n
    for _ in range(max_iter):
        for i in range(n):
            if done[i]:
                continue
            z = zs[i]
            p = 0j
            for c in reversed(a):
                p = p * z + c
            dp = 0j
            for c in reversed(da):
                dp = dp * z + c
            if p == 0:
                done[i] = True
                continue
            ratio = p / dp if dp != 0 else complex(1e-3, 1e-3)
            s = 0j
            for j in range(n):
                if j != i:
                    diff = z - zs[j]
                    if diff != 0:
                        s += 1 / diff
            denom = 1 - ratio * s
            step = ratio / denom if denom != 0 else ratio
            zs[i] = z - step
            if abs(step) <= 1e-15 * max(1.0, abs(zs[i])):
                done[i] = True
        if all(done) or all(backward_error(z) <= eps for z in zs):
            break
    else:
        worst = max(backward_error(z) for z in zs)
        if worst > eps:
            raise ConvergenceError(f"root iteration did not converge (backward error {worst:.3g})")
    worst = max(backward_error(z) for z in zs)
    if worst > eps:
        raise ConvergenceError(f"root iteration stalled at backward error {worst:.3g}")
    return _symmetrize(f, zs)


def _symmetrize(f: RatPoly, zs: list[complex]) -> list[complex]:
    n_real = sum(r.multiplicity for r in isolate_real_roots(f, eps=Fraction(1, 2**20), exact=False))
    order = sorted(zs, key=lambda z: abs(z.imag))
    real = sorted(z.real for z in order[:n_real])
    rest = order[n_real:]
    upper = sorted((z if z.imag > 0 else z.conjugate() for z in rest), key=lambda z: (z.real, z.imag))
    # each conjugate pair appears twice in ``upper``; average the partners
    pairs = []
    used = [False] * len(upper)
    for i, z in enumerate(upper):
        if used[i]:
            continue
        used[i] = True
        best, bj = None, -1
        for j in range(i + 1, len(upper)):
            if not used[j]:
                d = abs(upper[j] - z)
                if best is None or d < best:
                    best, bj = d, j
        if bj >= 0:
            used[bj] = True
            z = (z + upper[bj]) / 2
        pairs.append(complex(z.real, abs(z.imag)))
    out: list[complex] = [complex(x, 0.0) for x in real]
    for z in pairs:
        out.extend([z, z.conjugate()])
    return out


# -- reports -----------------------------------------------------------------------


@dataclass(frozen=True)
class RootReport:
    poly: RatPoly
    real_roots: tuple[RealRoot, ...]
    complex_pairs: tuple[complex, ...]
    eps: Fraction

    @property
    def n_distinct_real(self) -> int:
        return len(self.real_roots)

    @property
    def real_rooted(self) -> bool:
        return not self.complex_pairs

    def to_json(self) -> dict:
        return {
            "poly": self.poly.to_json(),
            "degree": self.poly.degree,
            "real_roots": [r.to_json() for r in self.real_roots],
            "n_distinct_real": self.n_distinct_real,
            "real_rooted": self.real_rooted,
            "complex_pairs": [[z.real, z.imag] for z in self.complex_pairs],
            "eps": f"{self.eps.numerator}/{self.eps.denominator}",
        }


def root_report(f: RatPoly, eps=Fraction(1, 10**12), complex_eps: float = 1e-12) -> RootReport:
    """Isolated real roots plus approximate nonreal roots (upper half-plane representatives)."""
    eps = _frac(eps)
    real = tuple(isolate_real_roots(f, eps))
    n_real = sum(r.multiplicity for r in real)
    pairs: tuple[complex, ...] = ()
    if n_real < f.degree:
        zs = complex_roots(f, complex_eps)
        pairs = tuple(z for z in zs if z.imag > 0)
        if 2 * len(pairs) + n_real != f.degree:
            raise PolynomialError("complex root count inconsistent with Sturm count")
    return RootReport(f, real, pairs, eps)
