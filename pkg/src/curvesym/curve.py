"""Rational parametrizations and the Möbius maps acting on their parameter.

A :class:`CurveSpec` holds ``x(t) = (x_1(t), ..., x_n(t))`` with each
component a reduced :class:`RationalFunction`.  Everything the detection
branches need from the curve (derivatives, norms, curvature, the curve
seen from infinity) is derived here once and cached.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from . import _linalg as la
from .exactnum import (
    ONE,
    T,
    ZERO,
    AlgValue,
    ParamPolynomial,
    Polynomial,
    RationalFunction,
    poly_gcd,
    square_decompose,
)


class DegenerateCurveError(ValueError):
    """The input is a line or a circle (infinitely many symmetries)."""


class GeneralPositionError(RuntimeError):
    """No reparametrization within the search bound met every condition."""


# -- the curve ------------------------------------------------------------------


class CurveSpec:
    """A rational plane or space curve ``t -> x(t)``."""

    __slots__ = ("components", "name", "__dict__")

    def __init__(self, components, name=None):
        comps = tuple(RationalFunction.coerce(c) for c in components)
        if len(comps) not in (2, 3):
            raise ValueError("a curve has 2 or 3 components, got %d" % len(comps))
        if all(c.is_constant() for c in comps):
            raise ValueError("constant parametrization")
        self.components = comps
        self.name = name

    @property
    def dim(self):
        return len(self.components)

    def __call__(self, t):
        return tuple(c(t) for c in self.components)

    def defined_at(self, t):
        return all(c.defined_at(t) for c in self.components)

    def __eq__(self, other):
        if not isinstance(other, CurveSpec):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    @cached_property
    def common_form(self):
        """``(numerators, D)`` with ``x_i = numerators[i] / D`` and D monic."""
        den = ONE
        for c in self.components:
            den = den * c.den.exact_div(poly_gcd(den, c.den))
        nums = [c.num * den.exact_div(c.den) for c in self.components]
        return nums, den

    @cached_property
    def degree(self):
        """Degree of the parametrization in common-denominator form."""
        nums, den = self.common_form
        return max([den.degree] + [n.degree for n in nums])

    def reparametrize(self, u):
        """The curve ``t -> x(u(t))`` for a Möbius map ``u`` with rational coefficients."""
        inner = u.as_rational_function()
        return CurveSpec([c.compose(inner) for c in self.components], self.name)

    @cached_property
    def at_infinity(self):
        """``x~(t) = x(1/t)``."""
        inv = RationalFunction(ONE, T)
        return CurveSpec([c.compose(inv) for c in self.components], self.name)

    @cached_property
    def hodograph(self):
        return hodograph(self)

    def format(self, var="t"):
        return "(" + ", ".join(c.format(var) for c in self.components) + ")"

    def __repr__(self):
        label = " %s" % self.name if self.name else ""
        return "<CurveSpec%s %s>" % (label, self.format())


# -- derivative data --------------------------------------------------------------


@dataclass(frozen=True)
class HodographData:
    d1: tuple
    d2: tuple
    norm1sq: RationalFunction
    dot12: RationalFunction
    cross12sq: RationalFunction
    kappa_sq: RationalFunction
    cross12: tuple


def _embed3(v):
    return list(v) + [RationalFunction(ZERO)] * (3 - len(v))


def hodograph(curve):
    """Exact x', x'', ||x'||^2, <x', x''>, ||x' x x''||^2 and the squared curvature."""
    d1 = tuple(c.derivative() for c in curve.components)
    d2 = tuple(c.derivative() for c in d1)
    norm1sq = la.dot(d1, d1)
    if norm1sq.is_zero():
        raise DegenerateCurveError("identically zero hodograph")
    dot12 = la.dot(d1, d2)
    cr = la.cross(_embed3(d1), _embed3(d2))
    cross12sq = la.dot(cr, cr)
    kappa_sq = cross12sq / norm1sq ** 3
    return HodographData(d1, d2, norm1sq, dot12, cross12sq, kappa_sq, tuple(cr))


def curvature_sq(curve):
    return curve.hodograph.kappa_sq


def _is_planar(curve):
    # A plane n.x = c through every point means the coefficient vectors of the
    # numerators and the common denominator are linearly dependent.
    nums, den = curve.common_form
    polys = list(nums) + [den]
    width = max(p.degree for p in polys) + 1
    rows = [[p.coeff(k) for p in polys] for k in range(width)]
    return la.rank(rows) < len(polys)


def is_degenerate(curve):
    """``'line'``, ``'circle'`` or ``'ok'``."""
    k = curve.hodograph.kappa_sq
    if k.is_zero():
        return "line"
    if k.is_constant() and k.constant_value() > 0:
        if curve.dim == 2 or _is_planar(curve):
            return "circle"
    return "ok"


# -- Möbius maps ---------------------------------------------------------------------


def _as_exact(x):
    if isinstance(x, AlgValue):
        return x
    if isinstance(x, float):
        raise TypeError("floating-point Möbius coefficient")
    return Fraction(x)


class MoebiusMap:
    """``t -> (a t + b) / (c t + d)`` with ``ad - bc != 0``.

    Coefficients are Fractions or AlgValues over one algebraic number.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = (_as_exact(x) for x in (a, b, c, d))
        if la.is_zero(self.delta):
            raise ZeroDivisionError("singular Möbius map (ad - bc = 0)")

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @property
    def delta(self):
        return self.a * self.d - self.b * self.c

    def is_rational(self):
        return not any(isinstance(x, AlgValue) and not x.is_rational()
                       for x in (self.a, self.b, self.c, self.d))

    def coefficients(self):
        return self.a, self.b, self.c, self.d

    def compose(self, other):
        """``self(other(t))``."""
        a, b, c, d = self.coefficients()
        e, f, g, h = other.coefficients()
        return MoebiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self):
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def is_identity(self):
        return la.is_zero(self.b) and la.is_zero(self.c) and la.is_zero(self.a - self.d)

    def normalized(self):
        """Scale so that ``d = 1``, or ``c = 1`` when ``d = 0``."""
        s = self.d if not la.is_zero(self.d) else self.c
        return MoebiusMap(self.a / s, self.b / s, self.c / s, self.d / s)

    def _rational(self, x):
        return x.exact if isinstance(x, AlgValue) else x

    def as_rational_function(self):
        if not self.is_rational():
            raise ValueError("Möbius map has irrational coefficients")
        a, b, c, d = (self._rational(x) for x in self.coefficients())
        return RationalFunction(Polynomial([b, a]), Polynomial([d, c]))

    def __call__(self, t):
        return self.as_rational_function()(t)

    def same_as(self, other):
        """Projective equality of the coefficient quadruples."""
        p, q = self.coefficients(), other.coefficients()
        for i in range(4):
            for j in range(i + 1, 4):
                if not la.is_zero(p[i] * q[j] - p[j] * q[i]):
                    return False
        return True

    def format(self, var="t"):
        n = self.normalized()
        if not n.is_rational():
            parts = [x.format("b") if isinstance(x, AlgValue) else str(x)
                     for x in n.coefficients()]
            return "((%s)*%s + (%s))/((%s)*%s + (%s))" % (
                parts[0], var, parts[1], parts[2], var, parts[3])
        a, b, c, d = (self._rational(x) for x in n.coefficients())
        num = Polynomial([b, a]).format(var)
        den = Polynomial([d, c]).format(var)
        return "(%s)/%s" % (num, den if Polynomial([d, c]).is_constant() else "(%s)" % den)

    def __repr__(self):
        return "MoebiusMap(%s)" % self.format()


def moebius_order(phi, bound):
    """Smallest ``k <= bound`` with ``phi**k`` the identity, else None."""
    power = phi
    for k in range(1, bound + 1):
        if power.is_identity():
            return k
        power = power.compose(phi)
    return None


def moebius_from_rf(u):
    """A MoebiusMap from a degree-one rational function ``(a t + b)/(c t + d)``."""
    u = RationalFunction.coerce(u)
    if u.num.degree > 1 or u.den.degree > 1:
        raise ValueError("not a Möbius transformation: %s" % u.format("t"))
    return MoebiusMap(u.num.coeff(1), u.num.coeff(0), u.den.coeff(1), u.den.coeff(0))


# -- general position -----------------------------------------------------------------


def _at_zero(rf):
    return rf(Fraction(0))


def general_position_conditions(curve):
    """The named conditions every detection branch relies on, each a bool.

    Base point: x(0) defined with x'(0) x x''(0) != 0.  Point at infinity,
    via x~(t) = x(1/t): x~(0) defined, x~'(0) x x~''(0) != 0 and
    <x~'(0), x~''(0)> != 0.  Involution branch: the unreduced numerator and
    denominator of c(b) share no real root away from the poles of x.
    """
    out = {}
    out["x0_defined"] = curve.defined_at(0)
    out["kappa0_nonzero"] = out["x0_defined"] and \
        _at_zero(curve.hodograph.cross12sq) != 0
    inf = curve.at_infinity
    out["xinf_defined"] = inf.defined_at(0)
    ok_inf = out["xinf_defined"]
    if ok_inf:
        try:
            h = inf.hodograph
        except DegenerateCurveError:
            ok_inf = False
    out["kappa_inf_nonzero"] = ok_inf and h.cross12sq.defined_at(0) and \
        _at_zero(h.cross12sq) != 0
    out["dot_inf_nonzero"] = out["kappa_inf_nonzero"] and _at_zero(h.dot12) != 0
    out["involution_c_coprime"] = out["kappa0_nonzero"] and \
        not _involution_shared_root(curve)
    return out


def involution_c_parts(curve):
    """Unreduced numerator and denominator of the involution's c(b).

    With x = N/D, x' = U/D^2 and x'' = V/D^3, c(b) equals
    -(<U,V> n0 + dot0 |U|^2 D) / (n0 (b <U,V> + 2 |U|^2 D)).
    Also returns ``D`` and ``gcd(U)``, whose roots are poles and stationary
    points of x; neither can be the image of the base point.
    """
    nums, den = curve.common_form
    dd = den.derivative()
    u = [n.derivative() * den - n * dd for n in nums]
    v = [ui.derivative() * den - 2 * ui * dd for ui in u]
    uv = sum((x * y for x, y in zip(u, v)), ZERO)
    uu = sum((x * x for x in u), ZERO)
    h = curve.hodograph
    n0 = _at_zero(h.norm1sq)
    dot0 = _at_zero(h.dot12)
    num = -(uv * n0 + uu * den * dot0)
    dnm = (uv * T + uu * den * 2) * n0
    stationary = ZERO
    for ui in u:
        stationary = poly_gcd(stationary, ui)
    return num, dnm, den, stationary


def _involution_shared_root(curve):
    from .exactnum import isolate_real_roots, remove_factors
    num, dnm, den, stationary = involution_c_parts(curve)
    g = poly_gcd(num, dnm)
    if g.is_zero():
        return True
    g = remove_factors(remove_factors(g, den), stationary)
    return g.degree > 0 and bool(isolate_real_roots(g))


def in_general_position(curve):
    return all(general_position_conditions(curve).values())


def _rationals_by_height():
    yield Fraction(0)
    h = 1
    while True:
        for q in range(1, h + 1):
            for p in ([h] if q < h else range(1, h + 1)):
                if gcd(p, q) == 1 and max(p, q) == h:
                    yield Fraction(p, q)
                    yield Fraction(-p, q)
        h += 1


def _moebius_by_height():
    # (p t + q) / (t + r) ordered by height, then |r|, |q|, |p|, signs.
    h = 1
    while True:
        rng = range(-h, h + 1)
        trip = [(p, q, r) for p in rng for q in rng for r in rng
                if max(abs(p), abs(q), abs(r)) == h and p * r - q != 0]
        trip.sort(key=lambda x: (abs(x[2]), abs(x[1]), abs(x[0]),
                                 x[2] < 0, x[1] < 0, x[0] < 0))
        for p, q, r in trip:
            yield MoebiusMap(p, q, 1, r)
        h += 1


def reparam_candidates(limit):
    """The deterministic search sequence: affine shifts, then Möbius maps."""
    out = []
    shifts = _rationals_by_height()
    while len(out) < min(limit, max(limit // 4, 1)):
        out.append(MoebiusMap(1, next(shifts), 0, 1))
    moeb = _moebius_by_height()
    while len(out) < limit:
        out.append(next(moeb))
    return out


def general_position_reparam(curve, max_candidates=200, start=0):
    """First candidate ``u`` (from index ``start``) putting ``x(u(t))`` in general position.

    Returns ``(u, recomposed curve, index)``.
    """
    if is_degenerate(curve) != "ok":
        raise DegenerateCurveError("curve is a %s" % is_degenerate(curve))
    bounded = curve.at_infinity.defined_at(0)
    failed = {}
    for i, u in enumerate(reparam_candidates(max_candidates)):
        if i < start:
            continue
        if u.c == 0 and not bounded:
            continue  # shifts cannot make x defined at infinity
        cand = curve if u.is_identity() else curve.reparametrize(u)
        conds = general_position_conditions(cand)
        if all(conds.values()):
            return u, cand, i
        for name, ok in conds.items():
            if not ok:
                failed[name] = failed.get(name, 0) + 1
    worst = ", ".join("%s (%d)" % kv for kv in sorted(failed.items()))
    raise GeneralPositionError(
        "no general-position reparametrization among %d candidates; failing: %s"
        % (max_candidates, worst or "x not defined at infinity"))


# -- properness -------------------------------------------------------------------------


def properness_check(curve, trials=5, seed=0):
    """Fiber-degree heuristic: ``'proper'``, ``'improper'`` or ``'inconclusive'``."""
    rng = random.Random(seed)
    degrees = []
    while len(degrees) < trials:
        # Large heights keep the samples off singular points such as nodes.
        t0 = Fraction(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 4))
        if not curve.defined_at(t0):
            continue
        g = ZERO
        for c in curve.components:
            f = c.num * c.den(t0) - c.den * c.num(t0)
            g = poly_gcd(g, f)
        degrees.append(g.degree)
    if all(d == 1 for d in degrees):
        return "proper"
    if all(d > 1 for d in degrees):
        return "improper"
    return "inconclusive"


# -- Pythagorean hodograph ----------------------------------------------------------------


@dataclass(frozen=True)
class PHData:
    c: Fraction
    s_num: Polynomial
    s_den: Polynomial

    def sigma_sq(self):
        return RationalFunction(self.s_num * self.s_num * self.c, self.s_den * self.s_den)


def ph_sigma(curve):
    """PH data ``||x'||^2 = c (s_num/s_den)^2`` if the hodograph norm is rational.

    The constant ``c`` need not be a square: ``sqrt(c)`` cancels from every
    formula that uses sigma, so only the monic parts matter.
    """
    n = curve.hodograph.norm1sq
    top = square_decompose(n.num)
    bot = square_decompose(n.den)
    if top is None or bot is None:
        return None
    return PHData(top[0] / bot[0], top[1], bot[1])


# -- substitution of a parameter family -----------------------------------------------------


def _clear_b_denominators(*rfs):
    """Common denominator L(b) and the numerators ``rf * L`` as polynomials."""
    lden = ONE
    for r in rfs:
        lden = lden * r.den.exact_div(poly_gcd(lden, r.den))
    return lden, [r.num * lden.exact_div(r.den) for r in rfs]


def family_inner_map(family):
    """``phi = N(b, t) / D(b, t)`` as ParamPolynomials with b-denominators cleared.

    d = 1 families substitute ``(a t + b)/(c t + 1)``; the d = 0 family is
    written on x~ and substitutes the polynomial map ``a~ t + b``.
    """
    bvar = Polynomial([0, 1])
    if family.d == 1:
        lden, (an, cn) = _clear_b_denominators(family.a_of_b, family.c_of_b)
        num = ParamPolynomial.linear(an, bvar * lden)
        den = ParamPolynomial.linear(cn, lden)
    else:
        at = family.a_tilde_of_b
        num = ParamPolynomial.linear(at.num, bvar * at.den)
        den = ParamPolynomial.from_b(at.den)
    return num, den


def compose_with_family(curve, family, inner=None):
    """Each component of ``x o phi`` as a pair ``(numerator, denominator)`` in Q[b][t].

    ``inner`` overrides the family's ``(N, D)`` pair.
    """
    num, den = family_inner_map(family) if inner is None else inner
    m_max = max(max(c.num.degree, c.den.degree) for c in curve.components)
    npow = [ParamPolynomial([ONE])]
    dpow = [ParamPolynomial([ONE])]
    for _ in range(m_max):
        npow.append(npow[-1] * num)
        dpow.append(dpow[-1] * den)
    out = []
    for comp in curve.components:
        m = max(comp.num.degree, comp.den.degree)
        out.append(tuple(_hom(p, npow, dpow, m) for p in (comp.num, comp.den)))
    return out


def _hom(p, npow, dpow, m):
    acc = ParamPolynomial()
    for k, a in enumerate(p.coeffs):
        if a:
            acc = acc + npow[k] * dpow[m - k] * a
    return acc
