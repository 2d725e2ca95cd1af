import random
from fractions import Fraction

import pytest
import sympy as sp

from curvesym import (
    CurveSpec,
    DegenerateCurveError,
    DetectOptions,
    MoebiusMap,
    detect_all,
    general_position_conditions,
    general_position_reparam,
    is_degenerate,
    moebius_order,
    ph_sigma,
    properness_check,
)
from curvesym.curve import compose_with_family, curvature_sq, hodograph, moebius_from_rf
from curvesym.exactnum import ONE, ParamPolynomial, RationalFunction

from .conftest import T_, curve, poly, sympy_curve, to_sympy

CUBIC3 = CurveSpec([poly(0, 1), poly(0, 0, 1), poly(0, 0, 0, 1)])
CIRCLE = curve("((1-t^2)/(1+t^2), 2*t/(1+t^2))")


def test_hodograph_examples():
    h = hodograph(CUBIC3)
    assert h.d1 == (RationalFunction(poly(1)), RationalFunction(poly(0, 2)),
                    RationalFunction(poly(0, 0, 3)))
    assert h.norm1sq == RationalFunction(poly(1, 0, 4, 0, 9))
    assert hodograph(curve("(t, t^2)")).d2[1] == RationalFunction(poly(2))


def test_curvature_examples():
    assert curvature_sq(curve("(t, 2*t + 1)")).is_zero()
    assert curvature_sq(CIRCLE) == RationalFunction(ONE)
    h = hodograph(CUBIC3)
    assert h.cross12sq(0) == 4 and h.norm1sq(0) == 1 and h.kappa_sq(0) == 4


@pytest.mark.parametrize("text", [
    "(t, t^2, t^3)", "((1-t^2)/(1+t^2), 2*t/(1+t^2))", "(t^3/3 - t, t^2, t^3/3 + t)",
    "(t^2/(t^2+1), t^3/(t+2))",
])
def test_hodograph_identities_against_sympy(text):
    c = curve(text)
    h = hodograph(c)
    x = sp.Matrix(sympy_curve(c) + [0] * (3 - c.dim))
    d1, d2 = x.diff(T_), x.diff(T_, 2)
    cr = d1.cross(d2)
    assert sp.simplify(to_sympy(h.norm1sq, T_) - d1.dot(d1)) == 0
    assert sp.simplify(to_sympy(h.cross12sq, T_) - cr.dot(cr)) == 0
    assert sp.simplify(to_sympy(h.dot12, T_) - d1.dot(d2)) == 0
    assert h.kappa_sq * h.norm1sq ** 3 == h.cross12sq


def test_is_degenerate_examples():
    assert is_degenerate(CIRCLE) == "circle"
    assert is_degenerate(curve("(t, 3*t - 1)")) == "line"
    assert is_degenerate(CUBIC3) == "ok"


def test_space_circle_needs_planarity():
    tilted = curve("(3/5*(1-t^2)/(1+t^2), 2*t/(1+t^2), 4/5*(1-t^2)/(1+t^2))")
    assert is_degenerate(tilted) == "circle"
    ellipse = curve("((1-t^2)/(1+t^2), 2*t/(1+t^2), (1-t^2)/(1+t^2))")
    assert is_degenerate(ellipse) == "ok"
    # A helix-like rational curve has no constant curvature and is not planar.
    assert is_degenerate(curve("((1-t^2)/(1+t^2), 2*t/(1+t^2), t)")) == "ok"


def test_degenerate_input_is_rejected():
    with pytest.raises(DegenerateCurveError):
        detect_all(CIRCLE)
    with pytest.raises(DegenerateCurveError):
        general_position_reparam(curve("(t, 3*t - 1)"))


def test_general_position_examples(deltoid):
    u, work, _ = general_position_reparam(deltoid)
    assert u.is_identity() and work == deltoid
    u, work, _ = general_position_reparam(CUBIC3)
    assert u.c != 0  # x(1/t) is undefined at 0 for any shift
    assert all(general_position_conditions(work).values())


def test_general_position_failure_is_named():
    conds = general_position_conditions(CUBIC3)
    assert conds["x0_defined"] and conds["kappa0_nonzero"]
    assert not conds["xinf_defined"]


def test_general_position_search_is_deterministic():
    a = general_position_reparam(CUBIC3)
    b = general_position_reparam(CUBIC3)
    assert a[0].same_as(b[0]) and a[2] == b[2]


@pytest.mark.parametrize("text", [
    "(t, t^2, t^3)", "(t^2, t^3, t^4)", "(t, t^2)", "(t^3 - 3*t, t^2)",
    "(t^2/(t^2+1), t^3/(t^2+1), t)",
])
def test_reparametrization_preserves_points(text):
    c = curve(text)
    u, work, _ = general_position_reparam(c)
    assert all(general_position_conditions(work).values())
    rng = random.Random(7)
    f = u.as_rational_function()
    checked = 0
    while checked < 50:
        t = Fraction(rng.randint(-300, 300), rng.randint(1, 50))
        if not (f.defined_at(t) and work.defined_at(t) and c.defined_at(f(t))):
            continue
        assert work(t) == c(f(t))
        checked += 1


def test_properness_examples():
    assert properness_check(curve("(t^2, t^4)")) == "improper"
    assert properness_check(curve("(t, t^2)")) == "proper"
    assert properness_check(CUBIC3) == "proper"


def test_corpus_curves_are_proper(corpus):
    for c, pinned, exp in corpus.values():
        assert properness_check(c) == "proper", c.name


def test_ph_examples(ph_cubic):
    ph = ph_sigma(ph_cubic)
    assert ph.c == 2 and ph.s_num == poly(1, 0, 1) and ph.s_den == poly(1)
    assert ph.sigma_sq() == ph_cubic.hodograph.norm1sq
    assert ph_sigma(CUBIC3) is None
    # ||x'||^2 = 1 + 4t^2 + 9t^4 for (t, t^2, t^3 - t^2) has an odd term; not a square
    assert ph_sigma(curve("(t, t^2, t^3 - t^2)")) is None


def test_compose_with_family_examples():
    b = poly(0, 1)
    a_b, c_b = poly(1, 1), poly(0, 3)
    inner = (ParamPolynomial.linear(a_b, b), ParamPolynomial.linear(c_b, poly(1)))
    (x_pair, y_pair) = compose_with_family(curve("(t, t^2)"), None, inner=inner)
    assert x_pair == inner
    assert y_pair == (inner[0] ** 2, inner[1] ** 2)
    phi = (ParamPolynomial.linear(poly(-1), poly(-2)), ParamPolynomial.from_b(poly(1)))
    (recip, _) = compose_with_family(curve("(1/t, t)"), None, inner=phi)
    assert recip == (ParamPolynomial.from_b(poly(1)), phi[0])


def test_moebius_basics():
    phi = MoebiusMap(-1, -2, 0, 1)
    assert moebius_order(phi, 10) == 2
    assert moebius_order(MoebiusMap.identity(), 10) == 1
    assert moebius_order(MoebiusMap(1, 1, 0, 1), 10) is None
    with pytest.raises(ZeroDivisionError):
        MoebiusMap(1, 2, 2, 4)
    u = moebius_from_rf(RationalFunction(poly(-1, 2), poly(2, 1)))
    assert u.same_as(MoebiusMap(2, -1, 1, 2))
    assert u.compose(u.inverse()).is_identity()


def test_deltoid_rotation_has_order_three(deltoid):
    rep = detect_all(deltoid, DetectOptions(reparam=MoebiusMap.identity()))
    (br,) = [br for br in rep.branches if br.branch == "plane_rotation_d1"]
    fam = br.family
    orders = [moebius_order(s.phi, 2 * deltoid.degree) for s in br.symmetries]
    assert orders == [3, 3]
    # Oracle: phi at b = 3 -+ sqrt(3) cubed is a multiple of the identity.
    b = sp.Symbol("b")
    for root in (3 - sp.sqrt(3), 3 + sp.sqrt(3)):
        a_v = to_sympy(fam.a_of_b, b).subs(b, root)
        c_v = to_sympy(fam.c_of_b, b).subs(b, root)
        m = sp.Matrix([[a_v, root], [c_v, 1]])
        m3 = (m ** 3).applyfunc(sp.nsimplify).applyfunc(sp.radsimp)
        assert sp.simplify(m3[0, 1]) == 0 and sp.simplify(m3[1, 0]) == 0
        assert sp.simplify(m3[0, 0] - m3[1, 1]) == 0
