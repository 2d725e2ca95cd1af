from fractions import Fraction

import pytest
import sympy as sp

from curvesym import CurveSpec, DetectOptions, MoebiusMap, detect_all
from curvesym.cli import load_corpus, parse_curve_expression
from curvesym.exactnum import Polynomial, RationalFunction

T_, B_ = sp.symbols("t b")

DELTOID = ("((-t^4+4*t^3-12*t^2+16*t-4)/(t^4-4*t^3+8*t^2-8*t+4), "
           "(8*t^3-24*t^2+24*t-8)/(t^4-4*t^3+8*t^2-8*t+4))")


def poly(*coeffs):
    """Polynomial from ascending coefficients."""
    return Polynomial([Fraction(c) for c in coeffs])


def curve(text, name=None):
    return parse_curve_expression(text, name=name)


# -- sympy bridges (oracles only) --

def to_sympy(x, var=B_):
    if isinstance(x, RationalFunction):
        return to_sympy(x.num, var) / to_sympy(x.den, var)
    return sum(sp.Rational(c.numerator, c.denominator) * var ** k
               for k, c in enumerate(x.coeffs))


def from_sympy_poly(expr, var=B_):
    p = sp.Poly(sp.expand(expr), var)
    cs = [sp.Rational(c) for c in reversed(p.all_coeffs())]
    return Polynomial([Fraction(int(c.p), int(c.q)) for c in cs])


def sympy_curve(c, var=T_):
    return [to_sympy(comp, var) for comp in c.components]


def same_rf(ours, expr, var=B_):
    return sp.simplify(to_sympy(ours, var) - expr) == 0


# -- shared curves --

@pytest.fixture(scope="session")
def deltoid():
    return curve(DELTOID, "deltoid")


@pytest.fixture(scope="session")
def twisted_cubic():
    c = CurveSpec([poly(0, 1), poly(0, 0, 1), poly(0, 0, 0, 1)], "twisted cubic")
    return c.reparametrize(MoebiusMap(0, 1, 1, 1))


@pytest.fixture(scope="session")
def parabola():
    return CurveSpec([poly(0, 1), poly(0, 0, 1)], "parabola")


@pytest.fixture(scope="session")
def ph_cubic():
    return curve("(t^3/3 - t, t^2, t^3/3 + t)", "PH cubic")


@pytest.fixture(scope="session")
def corpus():
    return {c.name: (c, pinned, exp) for c, pinned, exp in load_corpus()}


@pytest.fixture(scope="session")
def pinned_reports(corpus):
    return {name: detect_all(c, DetectOptions(reparam=pinned))
            for name, (c, pinned, exp) in corpus.items()}
