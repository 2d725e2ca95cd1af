"""Closing a set of verified symmetries under composition.

Two verified symmetries usually live over different algebraic numbers, so a
composite is carried as its list of factors and evaluated in interval
arithmetic on certified enclosures of the factors.  Equality and the identity
test are decided exactly by a gap argument: the Möbius map psi of a symmetry
of finite order k has ``tau = (a + d)^2 / (ad - bc)`` equal to 4 (psi = id)
or at most ``4 cos^2(pi/k)``.  Symmetry orders are bounded by twice the
degree, so refining the enclosures until tau falls on one side of the gap
settles the question.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import AlgValue

START_BITS = 48
MAX_BITS = 6144


class ClosureOverflowError(RuntimeError):
    """The closure grew past its bound or a gap test never resolved.

    A finite symmetry group cannot do either, so this signals a bug upstream.
    """


class Iv:
    """A closed interval with Fraction endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        self.lo = Fraction(lo)
        self.hi = self.lo if hi is None else Fraction(hi)

    def __add__(self, o):
        o = _iv(o)
        return Iv(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __sub__(self, o):
        o = _iv(o)
        return Iv(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, o):
        return _iv(o) - self

    def __neg__(self):
        return Iv(-self.hi, -self.lo)

    def __mul__(self, o):
        o = _iv(o)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Iv(min(ps), max(ps))

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _iv(o)
        if o.contains_zero():
            raise ZeroDivisionError("interval divisor contains 0")
        return self * Iv(1 / o.hi, 1 / o.lo)

    def contains_zero(self):
        return self.lo <= 0 <= self.hi

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    def rounded(self, bits):
        """Outward rounding to multiples of 2**-bits (keeps Fractions small)."""
        s = 1 << bits
        return Iv(Fraction(math.floor(self.lo * s), s), Fraction(math.ceil(self.hi * s), s))

    def __repr__(self):
        return "Iv(%s, %s)" % (float(self.lo), float(self.hi))


def _iv(x):
    return x if isinstance(x, Iv) else Iv(x)


def enclose(x, bits):
    """Certified interval for an exact value (Fraction, int or AlgValue)."""
    if isinstance(x, AlgValue):
        lo, hi = x.interval(Fraction(1, 1 << bits))
        return Iv(lo, hi).rounded(bits + 8)
    return Iv(x)


@dataclass(frozen=True)
class Enclosure:
    phi: tuple  # (a, b, c, d) as Iv
    Q: tuple
    t: tuple

    def compose(self, other, bits):
        """``self o other`` on enclosures."""
        a, b, c, d = self.phi
        e, f, g, h = other.phi
        r = lambda v: v.rounded(bits + 8)
        phi = (r(a * e + b * g), r(a * f + b * h), r(c * e + d * g), r(c * f + d * h))
        n = len(self.Q)
        q = tuple(tuple(r(sum((self.Q[i][k] * other.Q[k][j] for k in range(n)), Iv(0)))
                        for j in range(n)) for i in range(n))
        t = tuple(r(sum((self.Q[i][k] * other.t[k] for k in range(n)), Iv(0)) + self.t[i])
                  for i in range(n))
        return Enclosure(phi, q, t)


def base_enclosure(sym, bits):
    a, b, c, d = sym.phi.coefficients()
    return Enclosure(tuple(enclose(x, bits) for x in (a, b, c, d)),
                     tuple(tuple(enclose(x, bits) for x in row) for row in sym.Q),
                     tuple(enclose(x, bits) for x in sym.t))


def factors_of(sym):
    return sym.factors if isinstance(sym, ComposedSymmetry) else (sym,)


class _EnclosureCache:
    def __init__(self):
        self._base = {}

    def of(self, sym, bits):
        if len(self._base) > 20000:
            self._base.clear()
        out = None
        for f in factors_of(sym):
            key = (id(f), bits)
            if key not in self._base:
                self._base[key] = (f, base_enclosure(f, bits))
            e = self._base[key][1]
            out = e if out is None else out.compose(e, bits)
        return out


_CACHE = _EnclosureCache()


def tau_threshold(order_bound):
    """A rational strictly between ``4 cos^2(pi/K)`` and 4."""
    k = max(2, order_bound)
    top = 4 * math.cos(math.pi / k) ** 2
    return Fraction((top + 4) / 2)


def _relative(ef, eg):
    """Möbius coefficients of ``phi_f o phi_g^-1`` and the trace of ``Q_f Q_g^T``."""
    a, b, c, d = ef.phi
    e, f, g, h = eg.phi
    # phi_g^-1 = (h, -f, -g, e)
    pa, pb = a * h - b * g, -a * f + b * e
    pc, pd = c * h - d * g, -c * f + d * e
    n = len(ef.Q)
    tr = sum((ef.Q[i][k] * eg.Q[i][k] for i in range(n) for k in range(n)), Iv(0))
    return (pa, pb, pc, pd), tr


def equal_elements(f, g, order_bound, cache=None):
    """Exact equality of two curve symmetries given as (composed) certificates."""
    if f.det != g.det:
        return False
    cache = cache or _CACHE
    thr = tau_threshold(order_bound)
    bits = START_BITS
    while bits <= MAX_BITS:
        (a, b, c, d), tr = _relative(cache.of(f, bits), cache.of(g, bits))
        det = a * d - b * c
        if not det.contains_zero():
            tau = (a + d) * (a + d) / det
            if tau.hi < thr:
                return False
            if tau.lo > thr:
                n = len(f.Q)
                if n == 2:
                    return True
                # phi = id; rule out the mirror in the plane of a planar curve.
                if tr.lo > n - 1:
                    return True
                if tr.hi < n - 1:
                    return False
        bits *= 2
    raise ClosureOverflowError("gap test did not resolve at %d bits" % MAX_BITS)


def is_identity_element(f, order_bound, cache=None):
    cache = cache or _CACHE
    ident = _IdentityCert(len(f.Q))
    return equal_elements(f, ident, order_bound, cache)


class _IdentityCert:
    """The identity as a certificate with exact rational data."""

    det = 1

    def __init__(self, dim):
        from .curve import MoebiusMap
        one, zero = Fraction(1), Fraction(0)
        self.Q = [[one if i == j else zero for j in range(dim)] for i in range(dim)]
        self.t = [zero] * dim
        self.phi = MoebiusMap.identity()


@dataclass(frozen=True, eq=False)
class ComposedSymmetry:
    """The composite ``factors[0] o factors[1] o ...`` of verified symmetries."""

    factors: tuple
    det: int
    order_bound: int
    branch: str = "closure"
    label: str = "closure"

    @property
    def dim(self):
        return len(self.factors[0].Q)

    @property
    def Q(self):
        return self.enclosure(START_BITS).Q

    def enclosure(self, bits=START_BITS):
        return _CACHE.of(self, bits)

    def power(self, k):
        return ComposedSymmetry(self.factors * k, self.det ** k, self.order_bound)

    def is_involution(self):
        return is_identity_element(self.power(2), self.order_bound)

    def order(self):
        for k in range(1, self.order_bound + 1):
            if is_identity_element(self.power(k), self.order_bound):
                return k
        return None

    def residual_enclosure(self, curve, t0, bits=START_BITS):
        """Enclosure of ``f(x(t0)) - x(phi(t0))`` (must contain 0)."""
        e = self.enclosure(bits)
        a, b, c, d = e.phi
        s = (a * t0 + b) / (c * t0 + d)
        x0 = curve(Fraction(t0))
        n = self.dim
        fx = [sum((e.Q[i][k] * x0[k] for k in range(n)), Iv(0)) + e.t[i] for i in range(n)]
        xs = [_eval_rf_iv(comp, s) for comp in curve.components]
        return [u - v for u, v in zip(fx, xs)]


def _eval_rf_iv(rf, x):
    def horner(p):
        acc = Iv(0)
        for coef in reversed(p.coeffs):
            acc = acc * x + coef
        return acc
    return horner(rf.num) / horner(rf.den)


def group_closure(syms, curve, bound=1000):
    """All nontrivial elements of the group generated by ``syms``.

    The inputs come first (duplicates dropped), followed by the new composites
    in discovery order.  Each new composite is checked against the curve at a
    few rational parameters in interval arithmetic.
    """
    if not syms:
        return []
    k = max(2, 2 * curve.degree)
    known = []
    for s in syms:
        if not any(equal_elements(s, o, k) for o in known):
            known.append(s)
    gens = list(known)
    frontier = list(known)
    while frontier:
        fresh = []
        for f in frontier:
            for g in gens:
                h = ComposedSymmetry(factors_of(f) + factors_of(g), f.det * g.det, k)
                if is_identity_element(h, k):
                    continue
                if any(equal_elements(h, o, k) for o in known):
                    continue
                _check_composite(h, curve)
                known.append(h)
                fresh.append(h)
                if len(known) > bound:
                    raise ClosureOverflowError(
                        "more than %d symmetries; the group must be finite" % bound)
        frontier = fresh
    return known


def _check_composite(h, curve):
    from .detect import VerificationError
    for t0 in (Fraction(1, 3), Fraction(-2, 7), Fraction(5, 2)):
        try:
            res = h.residual_enclosure(curve, t0)
        except ZeroDivisionError:
            continue  # t0 at a pole of x or phi
        if not all(r.contains_zero() for r in res):
            raise VerificationError("composite is not a symmetry at t = %s" % t0)
