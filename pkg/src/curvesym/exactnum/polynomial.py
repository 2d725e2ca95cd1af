"""Exact univariate polynomials over the rationals."""

from fractions import Fraction
from math import gcd, isqrt, lcm

from . import _intpoly as ip


def _as_fraction(c):
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not accepted; "
                        "pass int, Fraction or a 'p/q' string")
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Immutable polynomial with rational coefficients.

    Stored as integer numerators over one positive common denominator, kept
    in lowest terms, so the public coefficients (ascending, see ``coeffs``)
    are always reduced fractions.  The zero polynomial has degree -1.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coeffs=()):
        fr = [_as_fraction(c) for c in coeffs]
        den = lcm(*(c.denominator for c in fr)) if fr else 1
        self._set([c.numerator * (den // c.denominator) for c in fr], den)

    def _set(self, ints, den):
        ip.strip(ints)
        if not ints:
            den = 1
        else:
            g = gcd(gcd(*ints), den)
            if g != 1:
                ints = [x // g for x in ints]
                den //= g
        self._num = tuple(ints)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, ints, den=1):
        p = cls.__new__(cls)
        if den < 0:
            ints, den = [-x for x in ints], -den
        p._set(list(ints), den)
        return p

    @classmethod
    def constant(cls, c):
        c = _as_fraction(c)
        return cls._raw([c.numerator], c.denominator)

    @classmethod
    def monomial(cls, n, c=1):
        c = _as_fraction(c)
        return cls._raw([0] * n + [c.numerator], c.denominator)

    @classmethod
    def linear(cls, root):
        """The monic polynomial ``t - root``."""
        root = _as_fraction(root)
        return cls._raw([-root.numerator, root.denominator], root.denominator)

    # -- accessors ---------------------------------------------------------

    @property
    def coeffs(self):
        d = self._den
        return tuple(Fraction(c, d) for c in self._num)

    @property
    def degree(self):
        return len(self._num) - 1

    @property
    def lc(self):
        if not self._num:
            return Fraction(0)
        return Fraction(self._num[-1], self._den)

    def coeff(self, k):
        if 0 <= k < len(self._num):
            return Fraction(self._num[k], self._den)
        return Fraction(0)

    def is_zero(self):
        return not self._num

    def is_constant(self):
        return len(self._num) <= 1

    def __bool__(self):
        return bool(self._num)

    def integer_form(self):
        """Return ``(ints, den)`` with ``self == Polynomial(ints) / den``."""
        return list(self._num), self._den

    def primitive(self):
        """Split into ``(content, prim)``: ``prim`` integral, primitive, lc > 0."""
        if not self._num:
            return Fraction(0), self
        c, p = ip.primitive(list(self._num))
        return Fraction(c, self._den), Polynomial._raw(p)

    def primitive_part(self):
        return self.primitive()[1]

    def monic(self):
        if not self._num:
            return self
        lc = self._num[-1]
        # (n_i/den) / (lc/den) = n_i / lc
        return Polynomial._raw(list(self._num), lc)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return None

    def __neg__(self):
        return Polynomial._raw([-x for x in self._num], self._den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            return Polynomial._raw(ip.add(self._num, other._num), d1)
        den = lcm(d1, d2)
        return Polynomial._raw(ip.add(ip.scale(self._num, den // d1),
                                      ip.scale(other._num, den // d2)), den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            return Polynomial._raw(ip.scale(self._num, other.numerator),
                                   self._den * other.denominator)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial._raw(ip.mul(self._num, other._num),
                               self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return self * (1 / other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        return Polynomial._raw(ip.power(list(self._num), n), self._den ** n)

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            raise ZeroDivisionError("polynomial division by zero")
        n, m = self.degree, other.degree
        if n < m:
            return Polynomial(), self
        # Pseudo-division on the integer numerators:
        # lc**(n-m+1) * f = Q*g + R, then rescale by the denominators.
        g = other._num
        lc = g[-1]
        r = list(self._num)
        q = [0] * (n - m + 1)
        for k in range(n - m, -1, -1):
            c = r[k + m]
            r = [lc * x for x in r]
            q = [lc * x for x in q]
            if c:
                q[k] += c
                for i, y in enumerate(g):
                    r[i + k] -= c * y
        qden = lc ** (n - m + 1) * self._den
        quo = Polynomial._raw(ip.scale(q, other._den), qden)
        rem = Polynomial._raw(ip.strip(r), qden)
        return quo, rem

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Quotient of an exact division; raises ``ArithmeticError`` otherwise."""
        other = self._coerce(other)
        if not other._num:
            raise ZeroDivisionError("polynomial division by zero")
        if not self._num:
            return self
        cf, pf = ip.primitive(list(self._num))
        cg, pg = ip.primitive(list(other._num))
        q = ip.exact_quotient(pf, pg)
        if q is None:
            raise ArithmeticError("division is not exact")
        # self = (cf/df) pf, other = (cg/dg) pg
        return Polynomial._raw(ip.scale(q, cf * other._den), cg * self._den)

    def divides(self, other):
        """True iff ``self`` divides ``other`` exactly."""
        if not self._num:
            return not other._num
        if not other._num:
            return True
        _, pf = ip.primitive(list(other._num))
        _, pg = ip.primitive(list(self._num))
        return ip.exact_quotient(pf, pg) is not None

    # -- evaluation & calculus -------------------------------------------------

    def __call__(self, x):
        if isinstance(x, Polynomial):
            return self.compose(x)
        x = _as_fraction(x)
        p, q = x.numerator, x.denominator
        v = ip.evaluate_homogeneous(self._num, p, q)
        return Fraction(v, self._den * q ** max(self.degree, 0))

    def sign_at(self, x):
        """Exact sign of the value at a rational point."""
        x = _as_fraction(x)
        return ip.sign(ip.evaluate_homogeneous(self._num, x.numerator, x.denominator))

    def derivative(self):
        return Polynomial._raw(ip.derivative(self._num), self._den)

    def compose(self, other):
        """``self(other(t))``."""
        result = Polynomial()
        for c in reversed(self.coeffs):
            result = result * other + c
        return result

    def homogenize(self, num, den, degree=None):
        """``den**m * self(num/den)`` for ``m = degree`` (default ``self.degree``)."""
        m = self.degree if degree is None else degree
        if not self._num:
            return Polynomial()
        cs = self.coeffs
        num_pows = [Polynomial.constant(1)]
        for _ in range(len(cs) - 1):
            num_pows.append(num_pows[-1] * num)
        den_pows = [Polynomial.constant(1)]
        for _ in range(m):
            den_pows.append(den_pows[-1] * den)
        total = Polynomial()
        for k, c in enumerate(cs):
            if c:
                total = total + num_pows[k] * den_pows[m - k] * c
        return total

    def reverse(self, n=None):
        """``t**n * self(1/t)`` with ``n`` defaulting to the degree."""
        n = self.degree if n is None else n
        ints = list(self._num) + [0] * (n + 1 - len(self._num))
        return Polynomial._raw(ints[::-1], self._den)

    def shift(self, a):
        """``self(t + a)``."""
        return self.compose(Polynomial([a, 1]))

    # -- rendering -----------------------------------------------------------

    def to_strings(self):
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        return "Polynomial([%s])" % ", ".join(
            str(c) if c.denominator == 1 else "'%s'" % c for c in self.coeffs)

    def format(self, var="t"):
        """Human-readable text, highest degree first."""
        if not self._num:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else "%s^%d" % (var, k)
                if a == 1:
                    body = mono
                elif a.denominator == 1:
                    body = "%s*%s" % (a, mono)
                else:
                    body = "(%s)*%s" % (a, mono)
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __str__(self):
        return self.format("t")


ZERO = Polynomial()
ONE = Polynomial([1])
T = Polynomial([0, 1])


def poly_gcd(p, q):
    """Monic gcd; ``gcd(p, 0) = monic(p)`` and ``gcd(0, 0) = 0``."""
    if p.is_zero() and q.is_zero():
        return ZERO
    g = ip.poly_gcd(list(p._num), list(q._num))
    return Polynomial._raw(g).monic()


def content_gcd(polys):
    """Monic gcd of all entries of a nonempty list."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise ValueError("content_gcd of an all-zero list is undefined")
    polys.sort(key=lambda p: (p.degree, p._den))
    g = polys[0].monic()
    for p in polys[1:]:
        if g.degree == 0:
            break
        if g.divides(p):
            continue
        g = poly_gcd(g, p)
    return g


def squarefree_part(p):
    """Monic ``p / gcd(p, p')``."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if p.degree <= 0:
        return ONE
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).monic()


def remove_factors(p, q):
    """Divide ``p`` by its common factors with ``q`` until they are coprime."""
    if q.is_zero():
        return p
    while p.degree > 0:
        g = poly_gcd(p, q)
        if g.degree <= 0:
            break
        p = p.exact_div(g)
    return p


def poly_sqrt(p):
    """Exact square root ``s`` with ``s*s == p`` and positive lc, or ``None``."""
    if p.is_zero():
        return ZERO
    n = p.degree
    if n % 2:
        return None
    lc = p.lc
    # Leading coefficient must be a rational square.
    rn, rd = lc.numerator, lc.denominator
    if rn < 0:
        return None
    sn, sd = isqrt(rn), isqrt(rd)
    if sn * sn != rn or sd * sd != rd:
        return None
    m = n // 2
    c = p.coeffs
    s = [Fraction(0)] * (m + 1)
    s[m] = Fraction(sn, sd)
    two_lead = 2 * s[m]
    # Match coefficients from the top: c[m+k] = sum_{i+j=m+k} s_i s_j
    for k in range(m - 1, -1, -1):
        acc = c[m + k]
        for i in range(k + 1, m):
            j = m + k - i
            if j <= m:
                acc -= s[i] * s[j]
        s[k] = acc / two_lead
    root = Polynomial(s)
    if root * root != p:
        return None
    return root


def square_decompose(p):
    """Write ``p = c * s**2`` with ``c > 0`` rational and ``s`` monic, or ``None``."""
    if p.is_zero() or p.lc <= 0:
        return None
    if p.degree % 2:
        return None
    c = p.lc
    s = poly_sqrt(p.monic())
    if s is None:
        return None
    return c, s.monic()
