"""Truncated power series in ``z`` and the generating-function / convolution identities.

Coefficients may be ints, IntPoly, RatFunc or XPoly; a series knows its
truncation order and never reports coefficients past it.  Every series with a
square root in its closed form is produced here by coefficient recursion from
an algebraic equation instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, List, Optional, Sequence, Tuple

from .arith import ONE, T, ZERO, IntPoly, binom
from .families import NonIntegerQuotient, XPOLY_ONE, XPOLY_ZERO, X, XPoly, fib_t
from .paths import GammaVector

__all__ = [
    "TSeries",
    "DEFAULT_ORDER",
    "ts_mul",
    "ts_pow",
    "solve_catalan_gf",
    "solve_gf",
    "GF_TAGS",
    "column_gf_check",
    "derivative_shift_check",
    "convolution_c",
    "convolution_u",
    "u_gamma",
    "central_binom_convolution",
    "central_binom_convolution_brute",
    "u2_closed_check",
    "u3_closed_check",
    "fib_t_gf_check",
]

DEFAULT_ORDER = 16


@dataclass(frozen=True)
class TSeries:
    """``sum_{n <= order} coeffs[n] z^n + O(z^(order+1))``."""

    coeffs: Tuple
    order: int

    def __post_init__(self):
        if self.order < -1 or len(self.coeffs) != self.order + 1:
            raise ValueError("a series stores exactly order+1 coefficients")

    @classmethod
    def of(cls, coeffs: Sequence, order: Optional[int] = None, zero=ZERO) -> "TSeries":
        coeffs = list(coeffs)
        n = len(coeffs) - 1 if order is None else order
        coeffs = (coeffs + [zero] * (n + 1 - len(coeffs)))[: n + 1]
        return cls(tuple(coeffs), n)

    def __getitem__(self, n: int):
        if n > self.order:
            raise IndexError(f"coefficient {n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TSeries(self.coeffs[: order + 1], order)

    def map(self, f: Callable) -> "TSeries":
        return TSeries(tuple(f(c) for c in self.coeffs), self.order)

    def __add__(self, other: "TSeries") -> "TSeries":
        n = min(self.order, other.order)
        return TSeries(tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)), n)

    def __neg__(self) -> "TSeries":
        return self.map(lambda c: -c)

    def __sub__(self, other: "TSeries") -> "TSeries":
        return self + (-other)

    def __mul__(self, other) -> "TSeries":
        if isinstance(other, TSeries):
            return ts_mul(self, other)
        return self.map(lambda c: c * other)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "TSeries":
        return ts_pow(self, m)

    def mul_z(self, k: int = 1, zero=ZERO) -> "TSeries":
        """Multiply by ``z^k``; the order grows by ``k``."""
        return TSeries((zero,) * k + self.coeffs, self.order + k)

    def div_z(self, k: int = 1) -> "TSeries":
        """Divide by ``z^k``; the dropped coefficients must vanish."""
        if any(not _is_zero(c) for c in self.coeffs[:k]):
            raise ArithmeticError("series is not divisible by z^%d" % k)
        return TSeries(self.coeffs[k:], self.order - k)

    def d_dt(self, m: int = 1) -> "TSeries":
        return self.map(lambda c: c.derivative(m))

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)


def _is_zero(c) -> bool:
    return c == 0 if isinstance(c, (int, Fraction)) else c.is_zero()


def ts_mul(a: TSeries, b: TSeries) -> TSeries:
    n = min(a.order, b.order)
    out = []
    for i in range(n + 1):
        acc = a.coeffs[0] * b.coeffs[i]
        for j in range(1, i + 1):
            acc = acc + a.coeffs[j] * b.coeffs[i - j]
        out.append(acc)
    return TSeries(tuple(out), n)


def ts_pow(a: TSeries, m: int, one=ONE) -> TSeries:
    if m < 0:
        raise ValueError("negative power")
    result = TSeries.of([one], a.order, zero=one * 0)
    base = a
    while m:
        if m & 1:
            result = ts_mul(result, base)
        m >>= 1
        if m:
            base = ts_mul(base, base)
    return result


def _conv(c: List, n: int):
    # sum_{i+j=n} c_i c_j
    acc = ZERO
    for i in range(n + 1):
        acc = acc + c[i] * c[n - i]
    return acc


@lru_cache(maxsize=None)
def _catalan_coeffs(order: int) -> Tuple[IntPoly, ...]:
    # C = 1 + (1-t) z C + t z C^2
    c = [ONE]
    for n in range(1, order + 1):
        c.append((1 - T) * c[n - 1] + T * _conv(c, n - 1))
    return tuple(c)


def solve_catalan_gf(order: int = DEFAULT_ORDER) -> TSeries:
    """``C(t, z) = sum C_n(t) z^n``, from ``t z C^2 = C - 1 - zC + t z C``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return TSeries(_catalan_coeffs(order), order)


def _solve_z2(order: int) -> Tuple[IntPoly, ...]:
    # f = 1 + z^2 f^2
    f = [ONE]
    for n in range(1, order + 1):
        f.append(_conv(f, n - 2) if n >= 2 else ZERO)
    return tuple(f)


def _solve_b(order: int) -> Tuple[IntPoly, ...]:
    # f = 1 + (1+t) z f + t z^2 f^2
    f = [ONE]
    for n in range(1, order + 1):
        v = (1 + T) * f[n - 1]
        if n >= 2:
            v = v + T * _conv(f, n - 2)
        f.append(v)
    return tuple(f)


def _solve_central(order: int) -> Tuple[IntPoly, ...]:
    # f0 = 1 + 2 z f0 c, with c the Catalan series in z (t = 1)
    c = [IntPoly([v(1)]) for v in _catalan_coeffs(order)]
    f0 = [ONE]
    for n in range(1, order + 1):
        acc = ZERO
        for i in range(n):
            acc = acc + f0[i] * c[n - 1 - i]
        f0.append(2 * acc)
    return tuple(f0)


def _solve_m(order: int) -> Tuple[IntPoly, ...]:
    # f0 = 1 + (1+t) z f0 + 2 t z^2 f0 f, with f the B series
    f = _solve_b(order)
    f0 = [ONE]
    for n in range(1, order + 1):
        v = (1 + T) * f0[n - 1]
        if n >= 2:
            acc = ZERO
            for i in range(n - 1):
                acc = acc + f0[i] * f[n - 2 - i]
            v = v + 2 * T * acc
        f0.append(v)
    return tuple(f0)


GF_TAGS = {
    "CATALAN_Z2": _solve_z2,
    "B_GF": _solve_b,
    "CENTRAL_BINOM": _solve_central,
    "M_GF": _solve_m,
    "CATALAN": lambda order: _catalan_coeffs(order),
}


def solve_gf(tag: str, order: int = DEFAULT_ORDER) -> TSeries:
    """Series solving the functional equation named by ``tag``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    try:
        solver = GF_TAGS[tag.upper()]
    except KeyError:
        raise KeyError(f"unknown generating function {tag!r}; known: {sorted(GF_TAGS)}") from None
    return TSeries(tuple(solver(order)), order)


def _column_series(tag: str, k: int, order: int) -> TSeries:
    from .triangles import triangle

    tri = triangle(tag, order)
    col = []
    for n in range(order + 1):
        e = tri.entry(n, k)
        col.append(e.as_intpoly() if e.is_polynomial() else e)
    return TSeries(tuple(col), order)


def column_gf_check(tag: str, k: int, order: int = DEFAULT_ORDER):
    """Compare a triangle column with its closed generating function.

    A: ``C (C-1)^k``;  B: ``(C-1)^(k+1) / z``;  D: ``M (C-1)^k``.
    Returns ``(ok, witness)``; the witness names the first differing coefficient.
    """
    tag = tag.upper()
    c = solve_catalan_gf(order + 1)
    cm1 = c - TSeries.of([ONE], c.order)
    if tag == "A":
        rhs = (c * ts_pow(cm1, k)).truncate(order)
    elif tag == "B":
        rhs = ts_pow(cm1, k + 1).div_z().truncate(order)
    elif tag == "D":
        rhs = (solve_gf("M_GF", order + 1) * ts_pow(cm1, k)).truncate(order)
    else:
        raise KeyError(f"no column generating function for triangle {tag!r}")
    lhs = _column_series(tag, k, order)
    for n in range(order + 1):
        if lhs[n] != rhs[n]:
            return False, {"n": n, "triangle": lhs[n].render(), "series": rhs[n].render()}
    return True, None


def derivative_shift_check(k: int, m: int, order: int = DEFAULT_ORDER):
    """``d^m/dt^m sum D_{n+m,k} z^n / ((n+m)...(n+1)) = C^m sum D_{n,k} z^n``."""
    from .triangles import d_closed

    if m < 1 or k < 0:
        raise ValueError("need m >= 1 and k >= 0")

    def d(n: int) -> IntPoly:
        return d_closed(n, k) if k <= n else ZERO

    lhs = []
    for n in range(order + 1):
        num = d(n + m).derivative(m)
        q = factorial(n + m) // factorial(n)
        if any(c % q for c in num):
            raise NonIntegerQuotient(f"D_{{{n + m},{k}}}^({m}) not divisible by {q}")
        lhs.append(IntPoly([c // q for c in num]))
    rhs = ts_mul(ts_pow(solve_catalan_gf(order), m), TSeries(tuple(d(n) for n in range(order + 1)), order))
    for n in range(order + 1):
        if lhs[n] != rhs[n]:
            return False, {"n": n, "lhs": lhs[n].render(), "rhs": rhs[n].render()}
    return True, None


# ---------------------------------------------------------------- convolutions

def _as_intpoly(terms: List[Fraction], what: str) -> IntPoly:
    out = []
    for v in terms:
        if v.denominator != 1:
            raise NonIntegerQuotient(f"{what}: coefficient {v} is not an integer")
        out.append(v.numerator)
    return IntPoly(out)


def convolution_c(n: int, m: int) -> IntPoly:
    """``c_n(m, t)``: coefficient of ``z^n`` in ``C(t, z)^m``."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    if n == 0:
        return ONE
    return _as_intpoly(
        [Fraction(binom(n - 1, k) * binom(n + m, k + m) * m, n + m) for k in range(n)], f"c_{n}({m})"
    )


def _prod(it) -> int:
    out = 1
    for v in it:
        out *= v
    return out


def convolution_u(n: int, m: int) -> IntPoly:
    """``u_m(n, t)``: coefficient of ``z^n`` in ``M(t, z)^m``, by the explicit sum."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    lead = binom(n + m - 1, m - 1)
    terms = []
    for k in range(n + 1):
        num = _prod(2 * n + m - 1 - 2 * j for j in range(k))
        den = _prod(2 * k + m - 1 - 2 * j for j in range(k))
        terms.append(Fraction(lead * binom(n, k) * num, den))
    return _as_intpoly(terms, f"u_{m}({n})")


def _double_factorial_even(k: int) -> int:
    # (2k)!! = 2 * 4 * ... * 2k
    return 2 ** k * factorial(k)


def u_gamma(n: int, m: int) -> GammaVector:
    """Gamma vector of ``u_m(n, t)`` from its explicit form."""
    lead = binom(n + m - 1, m - 1)
    gamma = []
    for k in range(n // 2 + 1):
        v = Fraction(lead * binom(2 * k, k) * binom(n, 2 * k) * _double_factorial_even(k),
                     _prod(m + 2 * i + 1 for i in range(k)))
        if v.denominator != 1:
            raise NonIntegerQuotient(f"gamma_{k} of u_{m}({n}) = {v}")
        gamma.append(v.numerator)
    while gamma and gamma[-1] == 0:
        gamma.pop()
    return GammaVector(tuple(gamma), n)


def central_binom_convolution(n: int, m: int) -> int:
    """``4^n binom(m/2 + n - 1, n)``, the m-fold convolution of central binomials."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    top = Fraction(m, 2) + n - 1
    b = Fraction(1)
    for i in range(n):
        b = b * (top - i) / (i + 1)
    v = 4 ** n * b
    if v.denominator != 1:
        raise NonIntegerQuotient(f"4^{n} binom({top}, {n}) = {v}")
    return v.numerator


def central_binom_convolution_brute(n: int, m: int) -> int:
    base = [binom(2 * i, i) for i in range(n + 1)]
    cur = [1] + [0] * n
    for _ in range(m):
        cur = [sum(cur[j] * base[i - j] for j in range(i + 1)) for i in range(n + 1)]
    return cur[n]


def u2_closed_check(n: int):
    """All four expressions for ``u_2(n, t)`` agree, plus the ``t -> t^2`` form."""
    from .triangles import narayana_b

    conv = ZERO
    for k in range(n + 1):
        conv = conv + narayana_b(k) * narayana_b(n - k)
    halves = [binom(2 * n + 2, 2 * k + 1) for k in range(n + 1)]
    if any(h % 2 for h in halves):
        return False, {"n": n, "odd": halves}
    half_sum = IntPoly([h // 2 for h in halves])
    split = IntPoly([binom(n + 1, 2 * k) for k in range(n // 2 + 2)]) * IntPoly(
        [binom(n + 1, 2 * k + 1) for k in range(n // 2 + 2)]
    )
    closed = convolution_u(n, 2)
    # u_2(n, t^2) = ((1+t)^(2n+2) - (1-t)^(2n+2)) / (4t)
    diff = (1 + T) ** (2 * n + 2) - (1 - T) ** (2 * n + 2)
    squared = IntPoly([c // 4 for c in diff.coeffs[1:]]) if all(c % 4 == 0 for c in diff) else None
    values = {
        "convolution": conv,
        "half_sum": half_sum,
        "split": split,
        "closed": closed,
    }
    if len(set(values.values())) != 1 or squared != closed.subs_t_power(2):
        return False, {"n": n, **{k: v.render() for k, v in values.items()},
                       "t^2 form": squared.render() if squared is not None else None}
    return True, None


def u3_closed_check(n: int):
    """``u_3(n, t) = binom(n+2, 2) C_{n+1}(t)``."""
    from .triangles import narayana

    lhs, rhs = convolution_u(n, 3), binom(n + 2, 2) * narayana(n + 1)
    return (True, None) if lhs == rhs else (False, {"n": n, "u3": lhs.render(), "closed": rhs.render()})


def fib_t_gf_check(order: int = DEFAULT_ORDER):
    """``(sum F_n(x,t) z^n)(1 - (x^2-1-t) z^2 + t z^4) = 1 + x z + t z^2``."""
    t = XPoly.constant(T)
    f = TSeries(tuple(fib_t(n) for n in range(order + 1)), order)
    den = TSeries.of([XPOLY_ONE, XPOLY_ZERO, -(X * X - XPOLY_ONE - t), XPOLY_ZERO, t], order, zero=XPOLY_ZERO)
    prod = ts_mul(f, den)
    want = TSeries.of([XPOLY_ONE, X, t], order, zero=XPOLY_ZERO)
    for n in range(order + 1):
        if prod[n] != want[n]:
            return False, {"n": n, "product": str(prod[n]), "expected": str(want[n])}
    return True, None
