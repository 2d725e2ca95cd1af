"""Curve expressions such as ``(t^2, t^3, t^4)``.

Grammar, with ``^`` binding tightest and taking an integer exponent >= 0::

    curve   := '(' expr (',' expr)* ')'
    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('+' | '-') unary | power
    power   := atom ('^' INT)*
    atom    := NUMBER | 't' | '(' expr ')'

NUMBER is an integer or a decimal such as ``2.5`` (read exactly).  Errors
carry the byte offset of the offending token in the UTF-8 input.
"""

from fractions import Fraction

from ..curve import CurveSpec
from ..exactnum import Polynomial, RationalFunction


class ParseError(ValueError):
    def __init__(self, message, offset):
        super().__init__("%s at byte %d" % (message, offset))
        self.offset = offset


_T = RationalFunction(Polynomial([0, 1]))


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def offset(self, pos=None):
        return len(self.text[:self.pos if pos is None else pos].encode("utf-8"))

    def error(self, message, pos=None):
        raise ParseError(message, self.offset(pos))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            self.error("expected %r, got %r" % (ch, got))
        self.pos += 1

    def curve(self):
        self.expect("(")
        comps = [self.expr()]
        while self.peek() == ",":
            self.pos += 1
            comps.append(self.expr())
        self.expect(")")
        if self.peek():
            self.error("unexpected %r after the curve" % self.peek())
        return comps

    def expr(self):
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek() in ("*", "/"):
            op, at = self.text[self.pos], self.pos
            self.pos += 1
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            elif rhs.is_zero():
                self.error("zero denominator", at)
            else:
                acc = acc / rhs
        return acc

    def unary(self):
        ch = self.peek()
        if ch in ("+", "-"):
            self.pos += 1
            v = self.unary()
            return -v if ch == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        exps = []
        while self.peek() == "^":
            self.pos += 1
            exps.append(self.integer())
        e = None
        for k in reversed(exps):  # right associative
            e = k if e is None else k ** e
        return base if e is None else base ** e

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("exponent must be an integer >= 0")
        return int(self.text[start:self.pos])

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            v = self.expr()
            self.expect(")")
            return v
        if ch == "t":
            self.pos += 1
            return _T
        if ch.isdigit() or ch == ".":
            start = self.pos
            while self.pos < len(self.text) and (self.text[self.pos].isdigit()
                                                 or self.text[self.pos] == "."):
                self.pos += 1
            try:
                value = Fraction(self.text[start:self.pos])
            except ValueError:
                self.error("bad number %r" % self.text[start:self.pos], start)
            return RationalFunction(Polynomial.constant(value))
        self.error("unexpected %r" % (ch or "end of input"))


def parse_expression(text):
    """One rational function of ``t``."""
    p = _Parser(text)
    v = p.expr()
    if p.peek():
        p.error("unexpected %r" % p.peek())
    return v


def parse_curve_expression(text, dim=None, name=None):
    comps = _Parser(text).curve()
    if dim is not None and len(comps) != dim:
        raise ParseError("expected %d components, got %d" % (dim, len(comps)), 0)
    if len(comps) not in (2, 3):
        raise ParseError("a curve has 2 or 3 components, got %d" % len(comps), 0)
    return CurveSpec(comps, name)


def format_curve_expression(curve):
    return "(%s)" % ", ".join(c.format("t") for c in curve.components)
