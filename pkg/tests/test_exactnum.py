from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from curvesym.exactnum import (
    EndpointRootError,
    Interval,
    ParamPolynomial,
    Polynomial,
    RationalFunction,
    content_gcd,
    isolate_real_roots,
    poly_gcd,
    refine_root,
    remove_factors,
    sign_at,
    square_decompose,
    squarefree_part,
    sturm_count,
    vanishes_at,
)

from .conftest import B_, from_sympy_poly, poly, to_sympy

B = poly(0, 1)
Q6 = poly(6, -6, 1)  # b^2 - 6b + 6


def root_in(p, lo, hi):
    """The unique root of ``p`` in ``[lo, hi]``, refined until that is visible."""
    roots = [refine_root(r, Fraction(1, 64)) for r in isolate_real_roots(p)]
    (r,) = [r for r in roots if lo <= r.lo and r.hi <= hi]
    return r


# -- Polynomial basics --

def test_zero_is_canonical():
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial([0, 0]) == Polynomial()
    assert Polynomial([1, 2, 0, 0]).degree == 1


def test_coefficients_are_reduced_fractions():
    p = Polynomial([Fraction(2, 4), 3])
    assert p.coeffs[0] == Fraction(1, 2)
    assert all(isinstance(c, Fraction) for c in p.coeffs)


def test_divmod_and_exact_div():
    p = poly(-1, 0, 1)
    q, r = divmod(p, poly(-1, 1))
    assert q == poly(1, 1) and r.is_zero()
    with pytest.raises(ArithmeticError):
        p.exact_div(poly(2, 1))


def test_rational_function_is_reduced_with_monic_den():
    r = RationalFunction(poly(2, 2), poly(-3, 0, 3))
    assert r.num == Polynomial([Fraction(2, 3)])
    assert r.den == poly(-1, 1)


# -- gcd family --

def test_gcd_examples():
    assert poly_gcd(poly(-1, 0, 1), poly(-1, 1)) == poly(-1, 1)
    p = poly(-1, 1) ** 2 * poly(2, 1)
    assert poly_gcd(p, poly(-1, 1) * poly(3, 1)) == poly(-1, 1)
    assert poly_gcd(poly(4, 2), Polynomial()) == poly(2, 1)
    assert poly_gcd(Polynomial(), Polynomial()).is_zero()


def test_squarefree_examples():
    assert squarefree_part(poly(-1, 1) ** 2 * poly(2, 1)) == poly(-1, 1) * poly(2, 1)
    assert squarefree_part(poly(1, 0, 1)) == poly(1, 0, 1)
    assert squarefree_part(B * Q6) == B * Q6
    with pytest.raises(ValueError):
        squarefree_part(Polynomial())


def test_content_gcd_examples(deltoid):
    from curvesym import DetectOptions, MoebiusMap, detect_all
    rep = detect_all(deltoid, DetectOptions(reparam=MoebiusMap.identity()))
    (rot,) = [br for br in rep.branches if br.branch == "plane_rotation_d1"]
    paper = B * poly(-1, 1) * poly(-2, -2, 1) * Q6
    # The bare coefficient gcd also carries the squared pole factor of x(b);
    # the candidate machinery strips it before anything else.
    pole = poly(2, -2, 1)
    assert content_gcd(rot.candidates.coefficients) == paper * pole ** 2
    assert rot.candidates.raw_content == paper
    assert content_gcd([poly(3, 1, 7), Polynomial([1])]) == Polynomial([1])
    p = poly(-1, 0, 1)
    assert content_gcd([p, p * poly(5, 2)]) == p
    with pytest.raises(ValueError):
        content_gcd([Polynomial(), Polynomial()])


def test_remove_factors():
    p = B ** 3 * poly(1, 1) ** 2 * Q6
    assert remove_factors(p, B * poly(1, 1)) == Q6


# -- Sturm and isolation --

def test_sturm_count_examples():
    assert sturm_count(poly(-2, 0, 1), Interval(0, 2)) == 1
    assert sturm_count(Q6, Interval(0, 6)) == 2
    assert sturm_count(poly(1, 0, 1), Interval(-10, 10)) == 0


def test_sturm_count_oracle():
    # (0, 6] holds both 3 -+ sqrt(3)
    assert sp.Poly(B_ ** 2 - 6 * B_ + 6).count_roots(0, 6) == 2


def test_sturm_endpoint_root_is_signaled():
    with pytest.raises(EndpointRootError):
        sturm_count(poly(-1, 1), Interval(1, 3))


def test_isolate_examples():
    roots = isolate_real_roots(B * Q6)
    assert len(roots) == 3
    assert [r.exact_rational for r in roots if r.is_rational()] == [0]
    assert roots[0].hi <= roots[1].lo and roots[1].hi <= roots[2].lo
    assert isolate_real_roots(poly(1, 0, 1)) == []
    (r,) = isolate_real_roots(poly(-1, 1) ** 3)
    assert r.exact_rational == 1
    with pytest.raises(ValueError):
        isolate_real_roots(Polynomial())


def test_every_isolating_interval_certifies_one_root():
    for p in (B * Q6, poly(-2, 0, 0, 0, 1), poly(1, -3, 0, 1) * poly(-5, 0, 7)):
        for r in isolate_real_roots(p):
            assert r.is_rational() or sturm_count(r.defining, r.isolating) == 1


def test_refine_root_example():
    alpha = root_in(Q6, 1, 2)
    fine = refine_root(alpha, Fraction(1, 10 ** 10))
    assert fine.hi - fine.lo <= Fraction(1, 10 ** 10)
    oracle = sp.N(3 - sp.sqrt(3), 30)
    assert fine.lo <= sp.Rational(str(oracle)) <= fine.hi
    assert float(fine) == pytest.approx(1.2679491924, abs=1e-10)
    assert refine_root(fine, Fraction(1, 10 ** 10)).isolating == fine.isolating


def test_refine_rational_root_collapses():
    (zero,) = [r for r in isolate_real_roots(B * Q6) if r.is_rational()]
    z = refine_root(zero, Fraction(1, 10 ** 6))
    assert z.lo == z.hi == 0


def test_sign_and_vanishing_examples():
    alpha = root_in(Q6, 1, 2)
    assert sign_at(poly(-1, 1), alpha) == 1
    assert sign_at(Q6, alpha) == 0
    assert sign_at(Polynomial([-1]), alpha) == -1
    assert vanishes_at(Q6, alpha)
    assert not vanishes_at(poly(-1, 1), alpha)
    assert vanishes_at(Q6 * poly(5, 1), alpha)


# -- square decomposition --

def test_square_decompose_examples():
    assert square_decompose(poly(2, 0, 4, 0, 2)) == (2, poly(1, 0, 1))
    assert square_decompose(poly(9, 0, 18, 0, 9)) == (9, poly(1, 0, 1))
    assert square_decompose(poly(1, 0, 4, 0, 9)) is None


def test_square_decompose_rejection_oracle():
    # 9t^4 + 4t^2 + 1 is not a constant times a square: its squarefree part is itself.
    p = 9 * B_ ** 4 + 4 * B_ ** 2 + 1
    assert sp.degree(sp.sqf_part(p), B_) == 4


def test_odd_degree_is_never_a_square():
    assert square_decompose(poly(1, 2, 1, 1)) is None


# -- ParamPolynomial --

def test_param_polynomial_arithmetic_matches_sympy():
    t = sp.Symbol("t")
    p = ParamPolynomial([poly(1, 1), poly(0, 0, 2), poly(-3)])  # (b+1) + 2b^2 t - 3t^2
    q = ParamPolynomial.linear(poly(0, 1), poly(2))              # b t + 2
    prod = p * q - q ** 2

    def sym(pp):
        return sum(to_sympy(c) * t ** k for k, c in enumerate(pp.coeffs))
    assert sp.expand(sym(prod) - (sym(p) * sym(q) - sym(q) ** 2)) == 0
    assert prod.eval_b(Fraction(1, 2)) == (p * q - q ** 2).eval_b(Fraction(1, 2))


# -- properties --

rat = st.fractions(min_value=-100, max_value=100, max_denominator=100)
small = st.integers(-20, 20)


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=1, max_size=6), st.lists(small, min_size=1, max_size=6),
       st.lists(small, min_size=1, max_size=4))
def test_gcd_divides_and_recombines(a, b, c):
    p = Polynomial(a) * Polynomial(c)
    q = Polynomial(b) * Polynomial(c)
    if p.is_zero() or q.is_zero():
        return
    g = poly_gcd(p, q)
    assert (p % g).is_zero() and (q % g).is_zero()
    assert p.exact_div(g) * q.exact_div(g) * g * g == p * q
    oracle = sp.gcd(to_sympy(p), to_sympy(q))
    assert g == from_sympy_poly(sp.Poly(oracle, B_).monic().as_expr())


@settings(max_examples=60, deadline=None)
@given(st.lists(rat, min_size=1, max_size=8, unique=True))
def test_isolation_finds_constructed_rational_roots(rs):
    p = Polynomial([1])
    for r in rs:
        p = p * Polynomial([-r, 1])
    roots = isolate_real_roots(p)
    assert [r.exact_rational for r in roots] == sorted(rs)


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=2, max_size=7), st.integers(0, 5))
def test_refine_keeps_a_sign_change(cs, k):
    p = Polynomial(cs)
    if p.degree < 1:
        return
    for r in isolate_real_roots(p):
        if r.is_rational():
            continue
        f = refine_root(r, Fraction(1, 10 ** k))
        d = f.defining
        assert d.sign_at(f.lo) * d.sign_at(f.hi) < 0
        assert f.lo >= r.lo and f.hi <= r.hi


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=2, max_size=5), st.lists(small, min_size=1, max_size=5))
def test_vanishes_at_agrees_with_sign_at(cs, gs):
    p = Polynomial(cs)
    g = Polynomial(gs)
    if p.degree < 1:
        return
    for r in isolate_real_roots(p):
        assert vanishes_at(g, r) == (sign_at(g, r) == 0)


@settings(max_examples=60, deadline=None)
@given(st.fractions(min_value=Fraction(1, 50), max_value=50, max_denominator=50),
       st.lists(rat, min_size=0, max_size=4))
def test_square_decompose_round_trip(c, tail):
    s = Polynomial(list(tail) + [1])
    p = s * s * c
    got = square_decompose(p)
    assert got is not None
    assert got[1] * got[1] * got[0] == p and got[1].lc == 1
