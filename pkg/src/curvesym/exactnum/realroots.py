"""Sturm sequences, real root isolation and real algebraic numbers.

A real algebraic number is held as a squarefree primitive integer polynomial
together with a rational interval that contains exactly one of its roots.
Every question asked about such a number downstream (is ``g(alpha)`` zero?
what is its sign?) is answered exactly from that pair.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import _intpoly as ip
from .polynomial import Polynomial, poly_gcd, squarefree_part


class EndpointRootError(ValueError):
    """The left endpoint of a Sturm query is itself a root."""


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError("interval with lo > hi")

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    def is_point(self):
        return self.lo == self.hi

    def contains(self, x):
        return self.lo <= x <= self.hi

    def overlaps(self, other):
        return self.lo <= other.hi and other.lo <= self.hi

    def __str__(self):
        return "[%s, %s]" % (self.lo, self.hi)


def _positive_part(a):
    g = gcd(*a)
    return [x // g for x in a] if g > 1 else list(a)


@lru_cache(maxsize=512)
def _sturm_ints(p):
    f = ip.primitive(p.integer_form()[0])[1]
    seq = [f]
    d = ip.derivative(f)
    if d:
        seq.append(_positive_part(d))
    while len(seq[-1]) > 1:
        f, g = seq[-2], seq[-1]
        r = ip.pseudo_rem(f, g)
        if not r:
            break
        k = len(f) - len(g) + 1
        # r = lc(g)**k * rem(f, g); keep a positive multiple of -rem.
        if g[-1] > 0 or k % 2 == 0:
            r = [-x for x in r]
        seq.append(_positive_part(r))
    return tuple(tuple(s) for s in seq)


def sturm_sequence(p):
    """Sturm sequence of ``p`` (scaled by positive constants) as Polynomials."""
    return [Polynomial._raw(list(s)) for s in _sturm_ints(p)]


def _variations_at(seq, x):
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    v = 0
    prev = 0
    for f in seq:
        s = ip.sign(ip.evaluate_homogeneous(f, num, den))
        if s:
            if prev and s != prev:
                v += 1
            prev = s
    return v


def _variations_at_infinity(seq, sign):
    v = 0
    prev = 0
    for f in seq:
        s = ip.sign(f[-1]) * (sign ** (len(f) - 1))
        if prev and s != prev:
            v += 1
        prev = s
    return v


def sturm_count(p, iv):
    """Number of distinct real roots of squarefree ``p`` in ``(lo, hi]``.

    A point interval counts whether its single point is a root.
    """
    if iv.is_point():
        return 1 if p.sign_at(iv.lo) == 0 else 0
    if p.sign_at(iv.lo) == 0:
        raise EndpointRootError("left endpoint %s is a root" % iv.lo)
    seq = _sturm_ints(p)
    return _variations_at(seq, iv.lo) - _variations_at(seq, iv.hi)


def root_bound(p):
    """A power of two strictly exceeding the modulus of every root."""
    ints = p.primitive()[1].integer_form()[0]
    lead = abs(ints[-1])
    m = max((abs(c) for c in ints[:-1]), default=0)
    return 1 << (m // lead + 2).bit_length()


class RealAlgebraic:
    """A real root of ``defining`` singled out by ``isolating``."""

    __slots__ = ("defining", "isolating", "exact_rational")

    def __init__(self, defining, isolating, exact_rational=None):
        self.defining = defining
        self.isolating = isolating
        self.exact_rational = None if exact_rational is None else Fraction(exact_rational)

    @classmethod
    def from_rational(cls, r):
        r = Fraction(r)
        return cls(Polynomial([-r.numerator, r.denominator]), Interval(r, r), r)

    def is_rational(self):
        return self.exact_rational is not None

    @property
    def lo(self):
        return self.isolating.lo

    @property
    def hi(self):
        return self.isolating.hi

    def refine(self, width):
        return refine_root(self, width)

    def approx(self, width=Fraction(1, 10 ** 12)):
        """A rational within ``width`` of the number."""
        if self.exact_rational is not None:
            return self.exact_rational
        return refine_root(self, width).isolating.mid

    def __float__(self):
        return float(self.approx(Fraction(1, 2 ** 60)))

    def same_number(self, other):
        """Exact equality of two real algebraic numbers."""
        a, b = self, other
        if a.exact_rational is not None and b.exact_rational is not None:
            return a.exact_rational == b.exact_rational
        if a.exact_rational is not None:
            a, b = b, a
        if b.exact_rational is not None:
            r = b.exact_rational
            return a.lo < r <= a.hi and a.defining.sign_at(r) == 0
        if not a.isolating.overlaps(b.isolating):
            return False
        # a equals b iff a is a root of b's polynomial inside b's interval.
        h = poly_gcd(a.defining, b.defining)
        if h.degree <= 0 or not vanishes_at(h, a):
            return False
        return _inside(a, b.lo, b.hi)

    def __repr__(self):
        if self.exact_rational is not None:
            return "RealAlgebraic(%s)" % self.exact_rational
        return "RealAlgebraic(root of %s in %s)" % (self.defining.format("b"), self.isolating)


def _inside(alpha, lo, hi):
    # Irrational alpha is never an endpoint, so refinement settles this.
    while True:
        if lo <= alpha.lo and alpha.hi <= hi:
            return True
        if alpha.hi <= lo or alpha.lo >= hi:
            return False
        alpha = refine_root(alpha, alpha.isolating.width / 4)


def _linear_root(ints):
    return Fraction(-ints[0], ints[1])


def isolate_real_roots(p):
    """All distinct real roots of ``p``, ascending, with disjoint intervals."""
    if p.is_zero():
        raise ValueError("cannot isolate the roots of the zero polynomial")
    if p.degree <= 0:
        return []
    sqf = squarefree_part(p).primitive_part()
    ints = sqf.integer_form()[0]
    if len(ints) == 2:
        r = _linear_root(ints)
        return [RealAlgebraic.from_rational(r)]
    seq = _sturm_ints(sqf)
    bound = root_bound(sqf)
    lo, hi = Fraction(-bound), Fraction(bound)
    stack = [(lo, hi, _variations_at(seq, lo), _variations_at(seq, hi))]
    found = []
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            found.append((lo, hi))
            continue
        mid = _split_point(sqf, lo, hi)
        vm = _variations_at(seq, mid)
        stack.append((mid, hi, vm, vhi))
        stack.append((lo, mid, vlo, vm))
    found.sort()
    lead = abs(ints[-1])
    rationals = []
    irrational = []
    for lo, hi in found:
        r = _rational_root_in(sqf, lo, hi, lead)
        if r is None:
            irrational.append((lo, hi))
        else:
            rationals.append(r)
    cofactor = sqf
    for r in rationals:
        cofactor = cofactor.exact_div(Polynomial([-r.numerator, r.denominator]))
    cofactor = cofactor.primitive_part()
    out = [RealAlgebraic.from_rational(r) for r in rationals]
    out += [RealAlgebraic(cofactor, Interval(lo, hi)) for lo, hi in irrational]
    out.sort(key=lambda a: a.isolating.lo)
    return out


def _split_point(p, lo, hi):
    # Bisection point, nudged deterministically off any root.
    mid = (lo + hi) / 2
    k = 3
    while p.sign_at(mid) == 0:
        mid = (lo + hi) / 2 + (hi - lo) / 2 ** k
        k += 1
    return mid


def _rational_root_in(p, lo, hi, lead):
    """The rational root of ``p`` in ``(lo, hi]`` if there is one.

    A rational root ``u/v`` in lowest terms has ``v | lead``; two such
    fractions are at least ``1/lead**2`` apart, so once the interval is
    narrower than half that, the best approximation with denominator at most
    ``lead`` is the only candidate.
    """
    if p.sign_at(hi) == 0:
        return hi
    s_lo = p.sign_at(lo)
    target = Fraction(1, 2 * lead * lead)
    while hi - lo >= target:
        mid = (lo + hi) / 2
        s = p.sign_at(mid)
        if s == 0:
            return mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    cand = ((lo + hi) / 2).limit_denominator(lead)
    if lo < cand <= hi and p.sign_at(cand) == 0:
        return cand
    return None


def refine_root(alpha, width):
    """Same number with an isolating interval no wider than ``width``."""
    if alpha.exact_rational is not None:
        return alpha
    width = Fraction(width)
    lo, hi = alpha.lo, alpha.hi
    if hi - lo <= width:
        return alpha
    p = alpha.defining
    s_lo = p.sign_at(lo)
    if s_lo == 0:
        # Left endpoint is open; move it inside without losing the root.
        lo = _split_point(p, lo, hi)
        s_lo = p.sign_at(lo)
        if sturm_count(p, Interval(lo, hi)) != 1:
            raise ArithmeticError("isolating interval lost its root")
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = p.sign_at(mid)
        if s == 0:
            return RealAlgebraic.from_rational(mid)
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return RealAlgebraic(p, Interval(lo, hi))


def interval_eval(p, lo, hi):
    """Enclosure of ``p`` over ``[lo, hi]`` by interval Horner evaluation."""
    a, b = Fraction(0), Fraction(0)
    for c in reversed(p.coeffs):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


def vanishes_at(g, alpha):
    """Exact test for ``g(alpha) == 0``."""
    if alpha.exact_rational is not None:
        return g(alpha.exact_rational) == 0
    if g.is_zero():
        return True
    h = poly_gcd(g, alpha.defining)
    if h.degree <= 0:
        return False
    if h.degree == alpha.defining.degree:
        return True
    return sturm_count(h.primitive_part(), alpha.isolating) == 1


def sign_at(g, alpha):
    """Exact sign of ``g(alpha)``."""
    if alpha.exact_rational is not None:
        return g.sign_at(alpha.exact_rational)
    if vanishes_at(g, alpha):
        return 0
    a = alpha
    while True:
        lo, hi = interval_eval(g, a.lo, a.hi)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        a = refine_root(a, a.isolating.width / 4)
