"""Canonical text form of exact values, and a parser that reads it back.

Polynomials in ``t`` are written with ascending powers (``1+3t+t^2``).
Polynomials in ``x`` are written with descending powers, each coefficient in
parentheses when it has more than one term (``x^2 - (1+t)``).  Rational numbers
are ``p/q``.  :func:`parse_xpoly` accepts everything the renderers emit, plus
explicit ``*``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from .arith import IntPoly, RatFunc, T
from .families import X, XPoly

__all__ = [
    "render_value",
    "render_xpoly",
    "render_xvalues",
    "parse_xpoly",
    "parse_ratfunc",
    "parse_intpoly",
    "parse_rational",
    "ParseError",
]


class ParseError(ValueError):
    pass


def render_value(v) -> str:
    """Render an int, Fraction, IntPoly or RatFunc."""
    if isinstance(v, (IntPoly, RatFunc)):
        return v.render()
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(v)


def _is_negative(c) -> bool:
    if isinstance(c, RatFunc):
        c = c.num
    if isinstance(c, IntPoly):
        return next(v for v in c if v) < 0
    return c < 0


def _top_level_sum(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and i > 0 and ch in "+-":
            return True
    return False


def _needs_parens(body: str, before_x: bool) -> bool:
    if _top_level_sum(body):
        return True
    return before_x and "/" in body


def _x_power(i: int) -> str:
    return "" if i == 0 else ("x" if i == 1 else f"x^{i}")


def _render_terms(terms: List[Tuple[int, object]]) -> str:
    # terms: (power of x, nonzero coefficient) in descending order
    if not terms:
        return "0"
    if len(terms) == 1 and terms[0][0] == 0:
        return render_value(terms[0][1])
    out = []
    for idx, (i, c) in enumerate(terms):
        neg = _is_negative(c)
        body = render_value(-c if neg else c)
        xp = _x_power(i)
        if xp:
            if body == "1":
                body = xp
            else:
                body = (f"({body})" if _needs_parens(body, True) else body) + xp
        elif _needs_parens(body, False):
            body = f"({body})"
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def render_xpoly(p: XPoly) -> str:
    terms = [(i, c) for i, c in reversed(list(enumerate(p.coeffs))) if not c.is_zero()]
    return _render_terms(terms)


def render_xvalues(values) -> str:
    """Render a polynomial in ``x`` given by rational coefficients (low-to-high)."""
    terms = [(i, Fraction(c)) for i, c in reversed(list(enumerate(values))) if c != 0]
    return _render_terms(terms)


_TOKEN = re.compile(r"\s*(?:(\d+)|([tx])|(\*\*|[-+*/^()]))")


def _tokenize(s: str) -> List[str]:
    pos, toks = 0, []
    s = s.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {s!r}")
        toks.append(m.group(1) or m.group(2) or ("^" if m.group(3) == "**" else m.group(3)))
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'a token'} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> XPoly:
        v = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r} in {self.text!r}")
        return v

    def expr(self) -> XPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        v = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self) -> XPoly:
        v = self.power()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                v = v * self.power()
            elif tok == "/":
                self.take()
                d = self.power()
                if d.degree > 0:
                    raise ParseError("division by a polynomial in x")
                if d.is_zero():
                    raise ParseError("division by zero")
                v = v * d.coeff(0).inverse()
            elif tok is not None and (tok.isdigit() or tok in ("t", "x", "(")):
                v = v * self.power()
            else:
                return v

    def power(self) -> XPoly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take()
            if not exp.isdigit():
                raise ParseError("exponents must be non-negative integers")
            return base ** int(exp)
        return base

    def atom(self) -> XPoly:
        tok = self.take()
        if tok.isdigit():
            return XPoly.constant(int(tok))
        if tok == "t":
            return XPoly.constant(T)
        if tok == "x":
            return X
        if tok == "(":
            v = self.expr()
            self.take(")")
            return v
        if tok == "-":
            return -self.power()
        raise ParseError(f"unexpected {tok!r} in {self.text!r}")


def parse_xpoly(text: str) -> XPoly:
    return _Parser(text).parse()


def parse_ratfunc(text: str) -> RatFunc:
    p = parse_xpoly(text)
    if p.degree > 0:
        raise ParseError(f"{text!r} depends on x")
    return p.coeff(0)


def parse_intpoly(text: str) -> IntPoly:
    return parse_ratfunc(text).as_intpoly()


def parse_rational(text: str) -> Fraction:
    f = parse_ratfunc(text)
    if f.num.degree > 0 or f.den.degree > 0:
        raise ParseError(f"{text!r} is not a constant")
    return Fraction(f.num[0], f.den[0])
