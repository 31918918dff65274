import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from relroots.poly import (
    ONE,
    Q,
    PolynomialError,
    RatPoly,
    RealRoot,
    cauchy_bound,
    complex_roots,
    count_distinct_real_roots,
    divide,
    exact_div,
    gcd,
    is_real_rooted,
    isolate_real_roots,
    rational_roots,
    reverse,
    root_report,
    squarefree_decomposition,
    squarefree_part,
    sturm_lead_criterion,
    sturm_sequence,
)

x = sp.symbols("x")

small_ints = st.integers(min_value=-6, max_value=6)
int_polys = st.lists(small_ints, min_size=2, max_size=8).map(RatPoly).filter(lambda p: p.degree >= 1)
rats = st.fractions(min_value=-3, max_value=3, max_denominator=6)


def to_sympy(p: RatPoly):
    return sp.Poly([sp.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], x)


# -- arithmetic --------------------------------------------------------------------


def test_normalisation_and_degree():
    assert RatPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert RatPoly().degree == -1
    assert RatPoly([0, 0]).is_zero()
    assert RatPoly([5]).degree == 0
    assert (Q ** 3).degree == 3


def test_immutable():
    p = RatPoly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (3,)


def test_exact_evaluation():
    p = RatPoly([1, -3, 2])  # (1-q)(1-2q)
    assert p(Fraction(1, 2)) == 0
    assert p(1) == 0
    assert isinstance(p(Fraction(1, 3)), Fraction)
    assert p.sign_at(math.inf) == 1 and p.sign_at(-math.inf) == 1
    assert RatPoly([0, -1]).sign_at(math.inf) == -1


def test_from_roots():
    p = RatPoly.from_roots([Fraction(-1, 4), 1], lead=4)
    assert p == RatPoly([-1, -3, 4])


def test_json_round_trip():
    p = RatPoly([Fraction(-1, 3), 0, 2])
    assert p.to_json() == ["-1/3", "0/1", "2/1"]
    assert RatPoly.from_json(p.to_json()) == p


def test_division_by_zero_poly():
    with pytest.raises(PolynomialError):
        divide(ONE, RatPoly())
    with pytest.raises(PolynomialError):
        exact_div(Q, Q + 1)


@given(int_polys, int_polys)
def test_division_identity(f, g):
    quot, rem = divide(f, g)
    assert quot * g + rem == f
    assert rem.degree < g.degree


@given(int_polys, int_polys)
@settings(max_examples=60)
def test_gcd_matches_sympy(f, g):
    ours = gcd(f, g)
    theirs = sp.gcd(to_sympy(f), to_sympy(g)).monic()
    assert [Fraction(int(c.p), int(c.q)) for c in reversed(theirs.all_coeffs())] == list(ours.coeffs)


def test_gcd_zero_cases():
    assert gcd(RatPoly([2, 4]), RatPoly()) == RatPoly([Fraction(1, 2), 1])
    with pytest.raises(PolynomialError):
        gcd(RatPoly(), RatPoly())


@given(int_polys, st.integers(1, 3), rats)
@settings(max_examples=60)
def test_squarefree_part_removes_repeats(f, k, r):
    g = f * RatPoly([-r, 1]) ** k
    sf = squarefree_part(g)
    assert (g % sf).is_zero()
    assert gcd(sf, sf.derivative()).degree == 0
    assert sf.lead * g.lead > 0


def test_squarefree_decomposition_example():
    f = RatPoly.from_roots([1, 1, 1, -2, -2, 3])
    parts = squarefree_decomposition(f)
    assert parts[0] == RatPoly.from_roots([3])
    assert parts[1] == RatPoly.from_roots([-2])
    assert parts[2] == RatPoly.from_roots([1])


def test_reverse():
    assert reverse(RatPoly([1, 2, 5, 8])) == RatPoly([8, 5, 2, 1])
    with pytest.raises(PolynomialError):
        reverse(RatPoly())


# -- Sturm ------------------------------------------------------------------------


def test_sturm_sequence_shape():
    f = RatPoly([-2, 0, 1])  # q^2 - 2
    seq = sturm_sequence(f)
    assert seq[0] == f and seq[1] == RatPoly([0, 2])
    assert seq[2] == RatPoly([2])
    assert seq.count(-2, 2) == 2
    assert seq.count(0, 2) == 1


def test_sturm_needs_nonconstant():
    with pytest.raises(PolynomialError):
        sturm_sequence(RatPoly([3]))


@given(int_polys)
@settings(max_examples=80, suppress_health_check=[HealthCheck.too_slow])
def test_real_root_count_matches_sympy(f):
    assert count_distinct_real_roots(f) == len(set(sp.real_roots(to_sympy(f))))


@given(int_polys, rats, rats)
@settings(max_examples=60)
def test_interval_count_matches_sympy(f, a, b):
    if a == b:
        return
    a, b = min(a, b), max(a, b)
    roots = set(sp.real_roots(to_sympy(f)))
    expect = sum(1 for r in roots if sp.Rational(a.numerator, a.denominator) < r <= sp.Rational(b.numerator, b.denominator))
    assert count_distinct_real_roots(f, a, b) == expect


@given(int_polys)
@settings(max_examples=60)
def test_integer_and_exact_sequences_agree(f):
    sf = squarefree_part(f)
    if sf.degree < 1:
        return
    exact, fast = sturm_sequence(sf), sturm_sequence(sf, exact=False)
    assert len(exact) == len(fast)
    for p, r in zip(exact.polys, fast.polys):
        assert p.degree == r.degree
        assert (p.lead > 0) == (r.lead > 0)


def test_real_rootedness():
    assert is_real_rooted(RatPoly.from_roots([-1, -1, 2]))
    assert not is_real_rooted(RatPoly([1, 0, 1]))
    assert is_real_rooted(RatPoly([7]))
    # 1 + 3q + 4q^2 has negative discriminant
    assert not is_real_rooted(RatPoly([1, 3, 4]))


@given(st.lists(rats, min_size=1, max_size=6, unique=True))
def test_lead_criterion_on_real_rooted(roots):
    f = RatPoly.from_roots(roots)
    assert sturm_lead_criterion(f)


@given(int_polys)
@settings(max_examples=60)
def test_lead_criterion_agrees_with_count(f):
    sf = squarefree_part(f)
    if sf.lead < 0:
        sf = -sf
    assert sturm_lead_criterion(sf) == is_real_rooted(sf)


# -- isolation --------------------------------------------------------------------


@given(int_polys)
@settings(max_examples=60, suppress_health_check=[HealthCheck.too_slow])
def test_isolation_brackets_sympy_roots(f):
    eps = Fraction(1, 10**6)
    ours = isolate_real_roots(f, eps)
    theirs = sorted(set(sp.real_roots(to_sympy(f))))
    assert len(ours) == len(theirs)
    for iv, r in zip(ours, theirs):
        assert iv.width <= eps
        assert sp.Rational(iv.lo.numerator, iv.lo.denominator) <= r <= sp.Rational(iv.hi.numerator, iv.hi.denominator)
        if r.is_Rational:
            assert iv.exact and iv.lo == Fraction(int(r.p), int(r.q))
    for a, b in zip(ours, ours[1:]):
        assert a.hi < b.lo


@given(st.lists(rats, min_size=1, max_size=5), st.integers(1, 3))
@settings(max_examples=50)
def test_multiplicities(roots, k):
    f = RatPoly.from_roots(roots) * RatPoly.from_roots(roots[:1]) ** k
    iv = {r.lo: r.multiplicity for r in isolate_real_roots(f)}
    for r in set(roots):
        expect = roots.count(r) + (k if r == roots[0] else 0)
        assert iv[r] == expect


def test_rational_root_snapping():
    # -1/4 needs the ceil/floor candidates, not the outward ones
    assert rational_roots(RatPoly([1, 4])) == [Fraction(-1, 4)]
    assert rational_roots(RatPoly.from_roots([Fraction(-2, 7), Fraction(5, 3)])) == [Fraction(-2, 7), Fraction(5, 3)]
    assert rational_roots(RatPoly([-2, 0, 1])) == []


def test_isolation_window_and_errors():
    f = RatPoly.from_roots([-2, -1, 1, 2])
    inside = isolate_real_roots(f, lo=0, hi=3)
    assert [r.lo for r in inside] == [1, 2]
    with pytest.raises(ValueError):
        isolate_real_roots(f, eps=0)
    with pytest.raises(PolynomialError):
        isolate_real_roots(RatPoly())
    assert isolate_real_roots(RatPoly([3])) == []


def test_irrational_root_width():
    (r,) = isolate_real_roots(RatPoly([-2, 0, 1]), eps=Fraction(1, 10**15), lo=0)
    assert not r.exact and r.width <= Fraction(1, 10**15)
    assert r.lo ** 2 < 2 < r.hi ** 2


def test_cauchy_bound_dominates():
    f = RatPoly([-100, 1, 1])
    assert all(abs(z) <= cauchy_bound(f) for z in complex_roots(f))


# -- complex roots -----------------------------------------------------------------


@given(int_polys)
@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_complex_roots_against_sympy(f):
    ours = sorted(complex_roots(f), key=lambda z: (round(z.real, 5), round(z.imag, 5)))
    # the oracle runs on the squarefree part: repeated roots stall its solver
    theirs = [complex(z) for z in to_sympy(squarefree_part(f)).nroots(n=15, maxsteps=500)]
    assert len(ours) == f.degree
    for z in theirs:
        assert min(abs(z - w) for w in ours) < 1e-4


def test_complex_roots_at_zero():
    assert complex_roots(RatPoly([0, 0, 1])) == [0j, 0j]
    zs = complex_roots(RatPoly([0, 1, 0, 1]))
    assert sorted((round(z.imag, 9) for z in zs)) == [-1, 0, 1]


def test_complex_roots_conjugate_symmetric():
    f = RatPoly([1, 2, 5, 8])
    zs = complex_roots(f)
    real = [z for z in zs if z.imag == 0]
    assert len(real) == 1
    upper = [z for z in zs if z.imag > 0]
    lower = [z for z in zs if z.imag < 0]
    assert len(upper) == len(lower) == 1
    assert upper[0] == lower[0].conjugate()


def test_root_report_counts():
    rep = root_report(RatPoly([1, 3, 6, 6]))
    assert rep.n_distinct_real == 1 and not rep.real_rooted
    assert len(rep.complex_pairs) == 1
    data = rep.to_json()
    assert data["degree"] == 3 and data["real_rooted"] is False


def test_real_root_json():
    r = RealRoot(Fraction(-1, 4), Fraction(-1, 4), 1)
    assert r.to_json()["interval"] == ["-1/4", "-1/4"]
    assert r.contains(Fraction(-1, 4))
