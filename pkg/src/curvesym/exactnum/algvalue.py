"""Exact arithmetic in Q(alpha) for a real algebraic number alpha.

An :class:`AlgValue` is ``f(alpha)`` for a rational function ``f`` whose
numerator and denominator are kept reduced modulo the defining polynomial of
``alpha``.  Zero tests and signs are exact; ``interval`` gives certified
enclosures for display and for the closure step.
"""

from fractions import Fraction

from .polynomial import Polynomial
from .ratfunc import RationalFunction
from .realroots import RealAlgebraic, interval_eval, refine_root, sign_at, vanishes_at


class AlgValue:
    __slots__ = ("expr", "at")

    def __init__(self, expr, at):
        expr = RationalFunction.coerce(expr)
        if at.exact_rational is not None:
            expr = RationalFunction(Polynomial.constant(expr(at.exact_rational)))
        elif not expr.is_constant():
            m = at.defining
            num, den = expr.num % m, expr.den % m
            if den.is_zero() or vanishes_at(den, at):
                raise ZeroDivisionError("denominator vanishes at %r" % (at,))
            expr = RationalFunction(num, den)
        self.expr = expr
        self.at = at

    @classmethod
    def rational(cls, r, at=None):
        r = Fraction(r)
        if at is None:
            at = RealAlgebraic.from_rational(r)
        v = cls.__new__(cls)
        v.expr = RationalFunction(Polynomial.constant(r))
        v.at = at
        return v

    # -- queries ---------------------------------------------------------------

    def is_rational(self):
        return self.expr.is_constant()

    @property
    def exact(self):
        """The value as a Fraction when it is rational, else None."""
        if self.expr.is_constant():
            return self.expr.constant_value()
        return None

    def is_zero(self):
        if self.expr.is_constant():
            return self.expr.constant_value() == 0
        return vanishes_at(self.expr.num, self.at)

    def sign(self):
        if self.expr.is_constant():
            v = self.expr.constant_value()
            return (v > 0) - (v < 0)
        return sign_at(self.expr.num, self.at) * sign_at(self.expr.den, self.at)

    def interval(self, width=Fraction(1, 10 ** 15)):
        """Certified rational enclosure ``(lo, hi)`` no wider than ``width``."""
        if self.expr.is_constant():
            v = self.expr.constant_value()
            return v, v
        width = Fraction(width)
        a = self.at
        while True:
            nlo, nhi = interval_eval(self.expr.num, a.lo, a.hi)
            dlo, dhi = interval_eval(self.expr.den, a.lo, a.hi)
            if dlo > 0 or dhi < 0:
                qs = (nlo / dlo, nlo / dhi, nhi / dlo, nhi / dhi)
                lo, hi = min(qs), max(qs)
                if hi - lo <= width:
                    return lo, hi
            a = refine_root(a, a.isolating.width / 16)

    def approx(self, width=Fraction(1, 10 ** 15)):
        lo, hi = self.interval(width)
        return (lo + hi) / 2

    def __float__(self):
        return float(self.approx(Fraction(1, 2 ** 60)))

    # -- arithmetic ------------------------------------------------------------

    def _other(self, other):
        if isinstance(other, AlgValue):
            if other.at is self.at or other.is_rational():
                return other.expr
            if self.is_rational():
                return None
            if not self.at.same_number(other.at):
                raise ValueError("AlgValues live over different algebraic numbers")
            return other.expr
        if isinstance(other, (int, Fraction)):
            return RationalFunction.coerce(other)
        return NotImplemented

    def _combine(self, other, op):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            # self is rational; adopt the other's field.
            return AlgValue(op(self.expr, other.expr), other.at)
        return AlgValue(op(self.expr, o), self.at)

    def __add__(self, other):
        return self._combine(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._combine(other, lambda x, y: y - x)

    def __mul__(self, other):
        return self._combine(other, lambda x, y: x * y)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, AlgValue) and other.is_zero() or \
                isinstance(other, (int, Fraction)) and other == 0:
            raise ZeroDivisionError("AlgValue division by zero")
        return self._combine(other, lambda x, y: x / y)

    def __rtruediv__(self, other):
        if self.is_zero():
            raise ZeroDivisionError("AlgValue division by zero")
        return self._combine(other, lambda x, y: y / x)

    def __neg__(self):
        v = AlgValue.__new__(AlgValue)
        v.expr = -self.expr
        v.at = self.at
        return v

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, AlgValue)):
            return (self - other).is_zero()
        return NotImplemented

    # Equality needs exact arithmetic, so values are not hashable.
    __hash__ = None

    def format(self, var="b"):
        if self.is_rational():
            return str(self.exact)
        return self.expr.format(var)

    def __repr__(self):
        if self.is_rational():
            return "AlgValue(%s)" % self.exact
        return "AlgValue(%s at %r)" % (self.expr.format("b"), self.at)
