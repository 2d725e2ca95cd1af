"""Reduced rational functions in one variable."""

from fractions import Fraction

from .polynomial import ONE, ZERO, Polynomial, poly_gcd


def _poly(x):
    if isinstance(x, Polynomial):
        return x
    return Polynomial.constant(x)


class RationalFunction:
    """``num / den`` with ``gcd(num, den) = 1`` and ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num, den = _poly(num), _poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = ONE
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc
        if lc != 1:
            num = num / lc
            den = den / lc
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, num, den):
        # Caller guarantees coprime inputs; only the monic scaling is applied.
        r = cls.__new__(cls)
        lc = den.lc
        if lc != 1:
            num, den = num / lc, den / lc
        r.num, r.den = num, den
        return r

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RationalFunction):
            return x
        return cls._reduced(_poly(x), ONE)

    # -- predicates ------------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self):
        return self.den.degree == 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return self.num.coeff(0)

    @property
    def degree(self):
        return max(self.num.degree, self.den.degree)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction.coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic ------------------------------------------------------------

    def __neg__(self):
        return RationalFunction._reduced(-self.num, self.den)

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            if not isinstance(other, (int, Fraction, Polynomial)):
                return NotImplemented
            other = RationalFunction.coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RationalFunction(a + c, b)
        if b == ONE:
            return RationalFunction._reduced(a * d + c, d)
        if d == ONE:
            return RationalFunction._reduced(a + c * b, b)
        g = poly_gcd(b, d)
        if g.degree <= 0:
            return RationalFunction._reduced(a * d + c * b, b * d)
        bg = b.exact_div(g)
        return RationalFunction(a * d.exact_div(g) + c * bg, bg * d)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (RationalFunction, int, Fraction, Polynomial)):
            return NotImplemented
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalFunction(ZERO)
            return RationalFunction._reduced(self.num * other, self.den)
        if isinstance(other, Polynomial):
            other = RationalFunction.coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RationalFunction(ZERO)
        g1 = poly_gcd(a, d) if d.degree > 0 else ONE
        g2 = poly_gcd(c, b) if b.degree > 0 else ONE
        if g1.degree > 0:
            a, d = a.exact_div(g1), d.exact_div(g1)
        if g2.degree > 0:
            c, b = c.exact_div(g2), b.exact_div(g2)
        return RationalFunction._reduced(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction._reduced(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return RationalFunction._reduced(self.num / other, self.den)
        return self * RationalFunction.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._reduced(self.num ** n, self.den ** n)

    # -- evaluation & calculus ----------------------------------------------------

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("pole of rational function at %s" % x)
        return self.num(x) / d

    def defined_at(self, x):
        return self.den(Fraction(x)) != 0

    def derivative(self):
        n, d = self.num, self.den
        if d.degree == 0:
            return RationalFunction._reduced(n.derivative(), d)
        # (n'd - nd')/d^2 with the gcd(d, d') trick
        dd = d.derivative()
        g = poly_gcd(d, dd)
        dg = d.exact_div(g)
        num = n.derivative() * dg - n * dd.exact_div(g)
        return RationalFunction(num, dg * d)

    def compose(self, inner):
        """``self(inner(t))`` for a polynomial or rational function ``inner``."""
        inner = RationalFunction.coerce(inner)
        u, v = inner.num, inner.den
        m = max(self.num.degree, self.den.degree, 0)
        return RationalFunction(self.num.homogenize(u, v, m),
                                self.den.homogenize(u, v, m))

    # -- rendering ---------------------------------------------------------------

    def format(self, var="t"):
        if self.den == ONE:
            return self.num.format(var)
        return "(%s)/(%s)" % (self.num.format(var), self.den.format(var))

    def __str__(self):
        return self.format("t")

    def __repr__(self):
        return "RationalFunction(%r, %r)" % (self.num, self.den)
