"""Exact coefficient arithmetic.

Integers are Python ints and rationals are :class:`fractions.Fraction`.  On top
of those this module provides dense polynomials in ``t`` with integer
coefficients (:class:`IntPoly`) and reduced quotients of them (:class:`RatFunc`).
Every value is immutable and every operation is exact.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import comb, gcd
from typing import Iterable, Sequence, Tuple, Union

Rational = Fraction

__all__ = [
    "IntPoly",
    "RatFunc",
    "Rational",
    "ZeroDenominator",
    "PoleAtPoint",
    "InexactDivision",
    "binom",
    "poly_add",
    "poly_mul",
    "poly_derivative",
    "poly_is_palindromic",
    "poly_gcd",
    "ratfunc_new",
    "ratfunc_eval",
    "as_fraction",
    "T",
    "ONE",
    "ZERO",
]


class ZeroDenominator(ZeroDivisionError):
    """A rational function was built (or divided) with a zero denominator."""


class PoleAtPoint(ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""


class InexactDivision(ArithmeticError):
    """An exact division in Z[t] left a remainder or a non-integer quotient."""


def binom(n: int, k: int) -> int:
    """Binomial coefficient with the usual combinatorial conventions.

    ``binom(n, k) = 0`` for ``k < 0`` or ``0 <= n < k``.  For negative ``n`` the
    generalized value ``(-1)^k binom(k - n - 1, k)`` is used, so ``binom(-1, 0) = 1``.
    """
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k) if k <= n else 0
    return (-1) ** k * comb(k - n - 1, k)


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _int_coeff(c) -> int:
    if isinstance(c, bool):
        raise TypeError("booleans are not polynomial coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    raise TypeError(f"IntPoly coefficient must be an integer, got {c!r}")


class IntPoly:
    """Dense polynomial in ``t`` over the integers, coefficients low-to-high.

    The coefficient tuple never has a trailing zero; the zero polynomial is the
    empty tuple and has degree -1.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        c = [_int_coeff(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c: Tuple[int, ...] = tuple(c)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: Sequence[int]) -> "IntPoly":
        # trusted path: caller guarantees ints; trailing zeros are still stripped
        p = object.__new__(cls)
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        p._c = tuple(c)
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls._raw((_int_coeff(c),))

    @classmethod
    def monomial(cls, c: int, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative exponent")
        return cls._raw((0,) * e + (_int_coeff(c),))

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    @property
    def lc(self) -> int:
        return self._c[-1] if self._c else 0

    def __getitem__(self, i: int) -> int:
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self._c == other._c
        if isinstance(other, int) and not isinstance(other, bool):
            return self._c == ((other,) if other else ())
        if isinstance(other, RatFunc):
            return other.den == ONE and other.num == self
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("IntPoly", self._c))
        return self._hash

    def __repr__(self) -> str:
        return f"IntPoly({list(self._c)!r})"

    def __str__(self) -> str:
        return self.render()

    def render(self, var: str = "t") -> str:
        """Ascending-power rendering such as ``1+3t+t^2`` or ``-2-t``."""
        if not self._c:
            return "0"
        parts = []
        for e, c in enumerate(self._c):
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if mag == 1 else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(sign + body)
        return "".join(parts)

    @staticmethod
    def _coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPoly._raw((other,))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly._raw([-c for c in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if other == 0:
                return ZERO
            return IntPoly._raw([c * other for c in self._c])
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._c, o._c
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return IntPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "IntPoly":
        if m < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def __call__(self, t0):
        """Horner evaluation at an int or Fraction."""
        acc = 0
        for c in reversed(self._c):
            acc = acc * t0 + c
        return acc

    def shift(self, k: int) -> "IntPoly":
        """Multiply by ``t^k``."""
        if not self._c:
            return self
        return IntPoly._raw((0,) * k + self._c)

    def derivative(self, m: int = 1) -> "IntPoly":
        if m < 0:
            raise ValueError("derivative order must be non-negative")
        c = self._c
        for _ in range(m):
            c = tuple(i * c[i] for i in range(1, len(c)))
        return IntPoly._raw(c)

    def content(self) -> int:
        """Non-negative gcd of the coefficients (0 for the zero polynomial)."""
        return reduce(gcd, self._c, 0)

    def primitive(self) -> "IntPoly":
        """Divide out the content and make the leading coefficient positive."""
        if not self._c:
            return self
        g = self.content()
        if self._c[-1] < 0:
            g = -g
        if g == 1:
            return self
        return IntPoly._raw([c // g for c in self._c])

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient in Z[t]; raises :class:`InexactDivision` unless exact."""
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if other.is_zero():
            raise ZeroDenominator("division by the zero polynomial")
        r = list(self._c)
        db, lb = other.degree, other.lc
        if len(r) - 1 < db:
            if r:
                raise InexactDivision(f"{self} is not divisible by {other}")
            return ZERO
        q = [0] * (len(r) - db)
        bc = other._c
        for shift in range(len(r) - 1 - db, -1, -1):
            top = r[shift + db]
            if top == 0:
                continue
            qc, rem = divmod(top, lb)
            if rem:
                raise InexactDivision(f"{self} is not divisible by {other} over Z")
            q[shift] = qc
            for i, b in enumerate(bc):
                r[shift + i] -= qc * b
        if any(r):
            raise InexactDivision(f"{self} is not divisible by {other}")
        return IntPoly._raw(q)

    def __floordiv__(self, other):
        return self.exact_div(other)

    def is_palindromic(self) -> Tuple[bool, int]:
        """``(coeffs read the same reversed, degree)``."""
        return self._c == self._c[::-1], self.degree

    def subs_t_power(self, k: int) -> "IntPoly":
        """The polynomial ``p(t^k)``."""
        if k == 1 or len(self._c) <= 1:
            return self
        out = [0] * (k * self.degree + 1)
        for i, c in enumerate(self._c):
            out[i * k] = c
        return IntPoly._raw(out)


ZERO = IntPoly._raw(())
ONE = IntPoly._raw((1,))
T = IntPoly._raw((0, 1))


def _prem(a: Tuple[int, ...], b: Tuple[int, ...]) -> IntPoly:
    """Pseudo-remainder of ``a`` by ``b`` (both non-zero, deg a >= deg b)."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while r and len(r) - 1 >= db:
        top, shift = r[-1], len(r) - 1 - db
        r = [x * lb for x in r]
        for i, v in enumerate(b):
            r[shift + i] -= top * v
        while r and r[-1] == 0:
            r.pop()
    return IntPoly._raw(r)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd in Q[t] with positive leading coefficient (primitive PRS)."""
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        if b.degree == 0:
            return ONE
        a, b = b, _prem(a._c, b._c).primitive()
    return a


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    return a + b


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    return a * b


def poly_derivative(a: IntPoly, m: int = 1) -> IntPoly:
    return a.derivative(m)


def poly_is_palindromic(a: IntPoly) -> Tuple[bool, int]:
    return a.is_palindromic()


Coefficient = Union[int, IntPoly, "RatFunc"]


class RatFunc:
    """A quotient ``num/den`` of integer polynomials in canonical form.

    Canonical means: ``num`` and ``den`` are coprime in Q[t], the integer
    contents of ``num`` and ``den`` are coprime, and ``den`` has a positive
    leading coefficient.  Zero is ``0/1``.  With these rules equal functions
    have identical representations, so ``==`` is structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Coefficient = 0, den: Coefficient = 1):
        if isinstance(num, (RatFunc, Fraction)) or isinstance(den, (RatFunc, Fraction)):
            n, d = _as_ratfunc(num), _as_ratfunc(den)
            if n is NotImplemented or d is NotImplemented:
                raise TypeError(f"cannot build a rational function from {num!r}, {den!r}")
            q = n / d
            self.num, self.den = q.num, q.den
        else:
            self.num, self.den = _canonical(_to_intpoly(num), _to_intpoly(den))
        self._hash = None

    @classmethod
    def _raw(cls, num: IntPoly, den: IntPoly) -> "RatFunc":
        f = object.__new__(cls)
        f.num, f.den, f._hash = num, den, None
        return f

    @classmethod
    def of(cls, value: Coefficient) -> "RatFunc":
        return _as_ratfunc(value)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def as_intpoly(self) -> IntPoly:
        if self.den != ONE:
            raise InexactDivision(f"{self} is not an integer polynomial")
        return self.num

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (IntPoly, int)) and not isinstance(other, bool):
            return self.den == ONE and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.den == ONE:
                self._hash = hash(self.num)
            else:
                self._hash = hash(("RatFunc", self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        return self.render()

    def render(self, var: str = "t") -> str:
        n = self.num.render(var)
        if self.den == ONE:
            return n
        if _term_count(self.num) > 1:
            n = f"({n})"
        d = self.den.render(var)
        if _term_count(self.den) > 1 or (self.den.degree > 0 and self.den.lc != 1):
            d = f"({d})"
        return f"{n}/{d}"

    def __add__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            if self.den == ONE:
                return RatFunc._raw(self.num + o.num, ONE)
            return RatFunc(self.num + o.num, self.den)
        if o.den == ONE:
            return RatFunc._raw_reduced_shared(self.num + o.num * self.den, self.den)
        if self.den == ONE:
            return RatFunc._raw_reduced_shared(o.num + self.num * o.den, o.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    @classmethod
    def _raw_reduced_shared(cls, num: IntPoly, den: IntPoly) -> "RatFunc":
        # num = a + b*den with a/den reduced, so gcd(num, den) = gcd(a, den) = 1
        # in Q[t]; only the integer contents may still share a factor.
        if num.is_zero():
            return RatFunc._raw(ZERO, ONE)
        g = gcd(num.content(), den.content())
        if g != 1:
            num = IntPoly._raw([c // g for c in num])
            den = IntPoly._raw([c // g for c in den])
        return RatFunc._raw(num, den)

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RATFUNC_ZERO
        if self.den == ONE and o.den == ONE:
            return RatFunc._raw(self.num * o.num, ONE)
        # cross-cancel before multiplying to keep the gcds small
        g1 = poly_gcd(self.num, o.den) if o.den != ONE else ONE
        g2 = poly_gcd(o.num, self.den) if self.den != ONE else ONE
        n1 = self.num.exact_div(g1) if g1 != ONE else self.num
        d2 = o.den.exact_div(g1) if g1 != ONE else o.den
        n2 = o.num.exact_div(g2) if g2 != ONE else o.num
        d1 = self.den.exact_div(g2) if g2 != ONE else self.den
        return RatFunc._raw(*_normalize_content(n1 * n2, d1 * d2))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDenominator("inverse of the zero rational function")
        return RatFunc._raw(*_normalize_content(self.den, self.num))

    def __truediv__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, m: int) -> "RatFunc":
        if m < 0:
            return self.inverse() ** (-m)
        return RatFunc._raw(*_normalize_content(self.num ** m, self.den ** m))

    def __call__(self, t0) -> Fraction:
        return ratfunc_eval(self, t0)

    def derivative(self, m: int = 1) -> "RatFunc":
        f = self
        for _ in range(m):
            f = RatFunc(f.num.derivative() * f.den - f.num * f.den.derivative(), f.den * f.den)
        return f


def _term_count(p: IntPoly) -> int:
    return sum(1 for c in p if c)


def _to_intpoly(value) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return IntPoly._raw((value,))
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return IntPoly._raw((value.numerator,))
    raise TypeError(f"cannot use {value!r} as an integer polynomial")


def _as_ratfunc(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, IntPoly):
        return RatFunc._raw(value, ONE)
    if isinstance(value, bool):
        return NotImplemented
    if isinstance(value, int):
        return RatFunc._raw(IntPoly._raw((value,)), ONE)
    if isinstance(value, Fraction):
        return RatFunc._raw(*_normalize_content(IntPoly._raw((value.numerator,)),
                                                IntPoly._raw((value.denominator,))))
    return NotImplemented


def _normalize_content(num: IntPoly, den: IntPoly) -> Tuple[IntPoly, IntPoly]:
    if num.is_zero():
        return ZERO, ONE
    g = gcd(num.content(), den.content())
    if den.lc < 0:
        g = -g
    if g != 1:
        num = IntPoly._raw([c // g for c in num])
        den = IntPoly._raw([c // g for c in den])
    return num, den


def _canonical(num: IntPoly, den: IntPoly) -> Tuple[IntPoly, IntPoly]:
    if den.is_zero():
        raise ZeroDenominator("rational function with zero denominator")
    if num.is_zero():
        return ZERO, ONE
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
    return _normalize_content(num, den)


RATFUNC_ZERO = RatFunc._raw(ZERO, ONE)
RATFUNC_ONE = RatFunc._raw(ONE, ONE)


def ratfunc_new(num: IntPoly, den: IntPoly) -> RatFunc:
    return RatFunc(num, den)


def ratfunc_eval(f: RatFunc, t0) -> Fraction:
    """Exact value ``f(t0)``; raises :class:`PoleAtPoint` at a root of the denominator."""
    t0 = as_fraction(t0)
    d = f.den(t0)
    if d == 0:
        raise PoleAtPoint(f"{f} has a pole at t = {t0}")
    return Fraction(f.num(t0)) / d
