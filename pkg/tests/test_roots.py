import math
from fractions import Fraction

import mpmath
import pytest
import sympy as sp

from relroots.families import complete, cycle, hk_gadget, k4_minus_e, make_family, theta
from relroots.graph import GraphError, Multigraph, count_cutsets, edge_substitute
from relroots.poly import RatPoly, is_real_rooted, reverse, sturm_sequence
from relroots.reliability import h_polynomial, reliability, split_reliability
from relroots.roots import (
    BETA_APPROX,
    BETA_CUBIC,
    BranchJumpError,
    Verdict,
    beta,
    beta_radical,
    branch_csv,
    branch_cubic,
    branch_radical,
    certify_nonreal,
    gadget_equation,
    invert_branch,
    k4e_branch,
    reliability_roots,
    synthesize_root_near,
    theta_real_rooted,
    verify_substitution_theorem,
)

BETA_TRUE = -0.570720298118725


def test_cycle_roots():
    r = reliability_roots(cycle(5))
    assert r.one_multiplicity == 4
    assert r.h == RatPoly([1, 4])
    (root,) = r.report.real_roots
    assert root.exact and root.lo == Fraction(-1, 4)
    data = r.to_json()
    assert data["real_roots"][0]["interval"] == ["-1/4", "-1/4"]


def test_k4_roots_have_conjugate_pair():
    r = reliability_roots(complete(4))
    assert r.report.n_distinct_real == 1
    assert len(r.report.complex_pairs) == 1
    assert not r.real_rooted


# -- certificate -------------------------------------------------------------------


def test_certificate_k4():
    c = certify_nonreal(complete(4))
    assert (c.c1, c.c2, c.bound, c.f2_lead) == (0, 0, 3, -2)
    assert c.verdict is Verdict.CERTIFIED_NONREAL
    assert c.to_json()["bound"] == "3/1"


def test_certificate_not_applicable_and_inconclusive():
    assert certify_nonreal(cycle(6)).verdict is Verdict.NOT_APPLICABLE
    # bridge present
    G = Multigraph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)))
    assert certify_nonreal(G).verdict is Verdict.INCONCLUSIVE
    with pytest.raises(GraphError):
        certify_nonreal(Multigraph(3, ((0, 1),)))


def test_certificate_on_large_graph_uses_forms():
    c = certify_nonreal(complete(8))
    assert c.c2 == 0 and c.verdict is Verdict.CERTIFIED_NONREAL


def test_f2_lead_is_the_sturm_coefficient(corpus):
    checked = 0
    for _, G in corpus:
        c = certify_nonreal(G)
        if c.verdict is Verdict.NOT_APPLICABLE or c.c1:
            continue
        seq = sturm_sequence(reverse(h_polynomial(G)))
        if len(seq) < 3:
            # repeated factor such as the bowtie's (1 + 2q)^2: f2 vanishes
            assert c.f2_lead == 0
        else:
            assert seq[2].degree == G.corank - 2
            assert seq[2].lead == c.f2_lead
        checked += 1
    assert checked > 50


def test_certified_graphs_are_not_real_rooted(corpus):
    for _, G in corpus:
        if certify_nonreal(G).verdict is Verdict.CERTIFIED_NONREAL:
            assert not is_real_rooted(h_polynomial(G))


# -- theta ---------------------------------------------------------------------------


def test_theta_criterion_examples():
    assert not theta_real_rooted(1, 2, 2)
    assert theta_real_rooted(1, 1, 4)
    with pytest.raises(ValueError):
        theta_real_rooted(2, 1, 3)


@pytest.mark.parametrize("lengths", [(l1, l2, l3) for l1 in range(1, 6) for l2 in range(l1, 6)
                                     for l3 in range(l2, 6)])
def test_theta_criterion_matches_sturm(lengths):
    h = h_polynomial(theta(*lengths))
    assert theta_real_rooted(*lengths) == is_real_rooted(h)


# -- gadgets and substitution -----------------------------------------------------------


def test_gadget_equation_k4e():
    K, T = k4_minus_e()
    eq = gadget_equation(K, T, Fraction(-1, 2))
    # splitRel - s Rel = (1-q)^2 (6q^3 + 2q^2 + (1/2)(-4q^3 + q^2 + 2q + 1))
    core = RatPoly([0, 0, 2, 6]) + RatPoly([1, 2, 1, -4]) * Fraction(1, 2)
    assert eq.poly == RatPoly([1, -1]) ** 2 * core
    assert core == BETA_CUBIC * Fraction(1, 2)
    roots = eq.real_roots()
    assert any(abs(r.approx - BETA_TRUE) < 1e-12 for r in roots)
    assert eq.to_json()["s"] == "-1/2"


@pytest.mark.parametrize("N", [3, 4, 5])
def test_substitution_theorem_hk(N):
    H, T = hk_gadget(3, 1)
    assert verify_substitution_theorem(cycle(N), H, T)


@pytest.mark.parametrize("N", [3, 4])
def test_substitution_theorem_k4e(N):
    H, T = k4_minus_e()
    assert verify_substitution_theorem(cycle(N), H, T)


def test_substitution_rejects_rootless_base():
    H, T = hk_gadget(3, 1)
    with pytest.raises(GraphError):
        verify_substitution_theorem(complete(5), H, T)


def test_substitution_closed_form_for_cycles():
    # Rel(C_N[H]) = Rel_H^(N-1) (Rel_H + N splitRel_H)
    H, T = k4_minus_e()
    rel_h, sp_h = reliability(H), split_reliability(H, T)
    for N in (3, 4):
        GH = edge_substitute(cycle(N), H, T)
        assert reliability(GH) == rel_h ** (N - 1) * (rel_h + sp_h * N)


# -- beta and the branch -----------------------------------------------------------------


def test_beta_radical_and_cubic_agree():
    b = beta()
    assert b.real_root_count == 1
    assert abs(float(b.value) - BETA_TRUE) < 1e-14
    assert b.root.lo <= Fraction(BETA_TRUE) <= b.root.hi or b.root.width < 1e-14
    assert b.to_json()["beta"] == "-0.5707202981"


def test_beta_against_sympy():
    q = sp.symbols("q")
    (r,) = sp.Poly(8 * q**3 + 5 * q**2 + 2 * q + 1, q).real_roots()
    assert abs(sp.N(r, 30) - sp.Float(mpmath.nstr(beta_radical(40), 35), 30)) < 1e-25


def test_printed_decimal_is_off():
    # the commonly quoted decimal leaves a residual far above the true root's
    assert abs(BETA_CUBIC(BETA_APPROX)) > 1e-8
    assert abs(BETA_CUBIC(float(beta_radical()))) < 1e-14


def test_branch_cubic_at_anchor():
    assert branch_cubic(Fraction(-1, 2)) == BETA_CUBIC * Fraction(-1, 2)


def test_branch_trace():
    pts = k4e_branch(Fraction(-1, 2), Fraction(-3, 20), 100)
    assert len(pts) == 101
    assert abs(pts[0].q - BETA_TRUE) < 1e-12
    assert all(p.n_real == 1 for p in pts)
    assert all(p.residual < 1e-9 for p in pts)
    assert max(abs(b.q - a.q) for a, b in zip(pts, pts[1:])) < 0.05
    # q(s) increases along the branch
    assert all(b.q > a.q for a, b in zip(pts, pts[1:]))
    assert branch_csv(pts).splitlines()[0] == "s,q"


@pytest.mark.parametrize("s", [Fraction(-1, 2), Fraction(-2, 5), Fraction(-1, 4), Fraction(-3, 20)])
def test_branch_radical_matches_trace(s):
    if s == Fraction(-1, 2):
        pt = k4e_branch(s, Fraction(-3, 20), 10)[0]
    else:
        pt = k4e_branch(Fraction(-1, 2), s, 10)[-1]
    z = branch_radical(s)
    assert abs(complex(z) - pt.q) < 1e-9


def test_branch_far_from_anchor_is_fast():
    pts = k4e_branch(Fraction(-1, 5) - Fraction(1, 10**6), Fraction(-1, 5), 1)
    assert len(pts) == 2 and abs(pts[1].q - complex(branch_radical(Fraction(-1, 5))).real) < 1e-9


def test_branch_argument_checks():
    with pytest.raises(ValueError):
        k4e_branch(Fraction(-3, 5), Fraction(-1, 5), 10)
    with pytest.raises(ValueError):
        k4e_branch(Fraction(-1, 2), Fraction(-1, 5), 0)
    assert issubclass(BranchJumpError, RuntimeError)


def test_invert_branch():
    pt = invert_branch(Fraction(-11, 20))
    assert abs(pt.q + 0.55) < 1e-9
    with pytest.raises(ValueError):
        invert_branch(Fraction(-1, 10))


# -- synthesis ---------------------------------------------------------------------------


@pytest.mark.parametrize("target", [Fraction(-1, 4), Fraction(-1, 3), Fraction(-9, 20)])
def test_synthesis_unconditional(target):
    res = synthesize_root_near(target, Fraction(1, 100))
    assert res.achieved and not res.conditional
    assert res.graph is not None and res.graph.is_simple()
    rel = reliability(res.graph)
    assert rel.sign_at(res.root.lo) * rel.sign_at(res.root.hi) <= 0
    assert abs(res.root.approx - float(target)) < 0.01


def test_synthesis_conditional_branch():
    res = synthesize_root_near(Fraction(-11, 20), Fraction(1, 100))
    assert res.conditional and res.graph is None
    assert res.gap < 1e-9


def test_synthesis_range():
    with pytest.raises(ValueError):
        synthesize_root_near(Fraction(-9, 10), Fraction(1, 100))
    with pytest.raises(ValueError):
        synthesize_root_near(Fraction(-1, 4), 0)


def test_hk_simple_root_in_gadget():
    for eta, k in [(3, 1), (4, 1), (4, 2), (5, 3)]:
        H, T = make_family(f"hk:{eta},{k}")
        eq = gadget_equation(H, T, 0)
        roots = [r for r in eq.real_roots() if r.exact]
        assert any(r.lo == Fraction(-k, 2 * (eta - 1)) and r.multiplicity == 1 for r in roots)
        assert math.isfinite(eq.real_roots()[0].approx)
        assert count_cutsets(H, 1) >= 1
