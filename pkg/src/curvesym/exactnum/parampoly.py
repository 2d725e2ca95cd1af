"""Polynomials in ``t`` whose coefficients are polynomials in a parameter ``b``."""

from fractions import Fraction
from math import lcm

from . import _intpoly as ip

from .polynomial import ONE, ZERO, Polynomial


class ParamPolynomial:
    """An element of Q[b][t], stored as its ascending list of t-coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Polynomial) else Polynomial.constant(c)
              for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_t(cls, p):
        """Embed a polynomial in ``t`` with constant coefficients."""
        return cls([Polynomial.constant(c) for c in p.coeffs])

    @classmethod
    def from_b(cls, q):
        """Embed a polynomial in ``b`` as a constant in ``t``."""
        return cls([q])

    @classmethod
    def linear(cls, slope, intercept):
        """``slope(b) * t + intercept(b)``."""
        return cls([intercept, slope])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, ParamPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return ParamPolynomial(out)

    def __neg__(self):
        return ParamPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (Polynomial, int, Fraction)):
            if isinstance(other, (int, Fraction)) and other == 0:
                return ParamPolynomial()
            return ParamPolynomial([c * other for c in self.coeffs])
        if not isinstance(other, ParamPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ParamPolynomial()
        if len(a) == 1:
            return ParamPolynomial([a[0] * y for y in b])
        if len(b) == 1:
            return ParamPolynomial([x * b[0] for x in a])
        return _packed_mul(a, b)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = ParamPolynomial([ONE])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def eval_b(self, b):
        """Specialize the parameter: a polynomial in ``t``."""
        return Polynomial([c(b) for c in self.coeffs])

    def eval_t(self, t):
        """Specialize ``t``: a polynomial in ``b``."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def b_degree(self):
        return max((c.degree for c in self.coeffs), default=-1)

    def __repr__(self):
        return "ParamPolynomial(%r)" % (list(self.coeffs),)


def _integer_rows(cs):
    # Common denominator of all coefficients, then integer rows.
    den = lcm(*(c._den for c in cs))
    rows = []
    for c in cs:
        k = den // c._den
        rows.append([x * k for x in c._num] if k != 1 else list(c._num))
    return rows, den


def _packed_mul(a, b):
    """Bivariate product by substituting ``t = b**stride`` (Kronecker)."""
    ra, da = _integer_rows(a)
    rb, db = _integer_rows(b)
    stride = max(map(len, ra)) + max(map(len, rb)) - 1
    fa = [0] * (stride * len(ra))
    for i, row in enumerate(ra):
        fa[i * stride:i * stride + len(row)] = row
    fb = [0] * (stride * len(rb))
    for i, row in enumerate(rb):
        fb[i * stride:i * stride + len(row)] = row
    prod = ip.mul(ip.strip(fa), ip.strip(fb))
    den = da * db
    out = []
    for i in range(len(ra) + len(rb) - 1):
        chunk = prod[i * stride:(i + 1) * stride]
        out.append(Polynomial._raw(list(chunk), den))
    return ParamPolynomial(out)
