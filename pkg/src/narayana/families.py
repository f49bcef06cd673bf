"""Polynomial families generated by three-term recurrences.

Each family ``p_n(x)`` obeys ``p_n = (x - s_{n-1}) p_{n-1} - t_{n-2} p_{n-2}``
with ``p_{-1} = 0`` and ``p_0 = 1``; the coefficients ``s_k, t_k`` are rational
functions of ``t``.  The recurrence output is the ground truth.  The explicit
coefficient formulas live next to it so the two can be compared.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .arith import (
    T,
    IntPoly,
    RatFunc,
    RATFUNC_ONE,
    RATFUNC_ZERO,
    as_fraction,
    binom,
)

__all__ = [
    "XPoly",
    "Recurrence",
    "PoleInCoefficient",
    "IndexOutOfTriangle",
    "NonzeroSRejected",
    "NonIntegerQuotient",
    "run_recurrence",
    "evaluate_recurrence",
    "fibonacci_general",
    "fibonacci_recurrence",
    "fib",
    "fib_t",
    "q_poly",
    "p_poly",
    "lucas",
    "lucas_t",
    "r_poly",
    "s_poly",
    "lucas_r",
    "lucas_s",
    "fib_p",
    "fib_q",
    "coef_closed_q",
    "coef_closed_p",
    "coef_closed_F",
    "coef_closed_R",
    "coef_closed_S",
    "g_coef",
    "split_even_odd",
    "periodic_check",
    "FAMILIES",
]


class PoleInCoefficient(ZeroDivisionError):
    pass


class IndexOutOfTriangle(IndexError):
    pass


class NonzeroSRejected(ValueError):
    pass


class NonIntegerQuotient(ArithmeticError):
    pass


Scalar = Union[int, IntPoly, RatFunc]


def _rf(c) -> RatFunc:
    return c if isinstance(c, RatFunc) else RatFunc.of(c)


class XPoly:
    """Polynomial in ``x`` whose coefficients are rational functions of ``t``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [_rf(v) for v in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self._c: Tuple[RatFunc, ...] = tuple(c)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: Sequence[RatFunc]) -> "XPoly":
        p = object.__new__(cls)
        c = list(coeffs)
        while c and c[-1].is_zero():
            c.pop()
        p._c = tuple(c)
        p._hash = None
        return p

    @classmethod
    def x(cls, power: int = 1) -> "XPoly":
        return cls._raw((RATFUNC_ZERO,) * power + (RATFUNC_ONE,))

    @classmethod
    def constant(cls, c: Scalar) -> "XPoly":
        return cls._raw((_rf(c),))

    @property
    def coeffs(self) -> Tuple[RatFunc, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, i: int) -> RatFunc:
        return self._c[i] if 0 <= i < len(self._c) else RATFUNC_ZERO

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, XPoly):
            return self._c == other._c
        if isinstance(other, (int, IntPoly, RatFunc)) and not isinstance(other, bool):
            return self == XPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("XPoly", self._c))
        return self._hash

    def __repr__(self) -> str:
        return f"XPoly({[str(c) for c in self._c]!r})"

    def __str__(self) -> str:
        from .render import render_xpoly

        return render_xpoly(self)

    @staticmethod
    def _coerce(other):
        if isinstance(other, XPoly):
            return other
        if isinstance(other, (int, IntPoly, RatFunc, Fraction)) and not isinstance(other, bool):
            return XPoly.constant(other)
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
            out[i] = out[i] + v
        return XPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly._raw([-c for c in self._c])

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
        if isinstance(other, (int, IntPoly, RatFunc, Fraction)) and not isinstance(other, bool):
            c = _rf(other)
            if c.is_zero():
                return XPOLY_ZERO
            return XPoly._raw([v * c for v in self._c])
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return XPOLY_ZERO
        out = [RATFUNC_ZERO] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u.is_zero():
                continue
            for j, v in enumerate(b):
                if not v.is_zero():
                    out[i + j] = out[i + j] + u * v
        return XPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "XPoly":
        result, base = XPOLY_ONE, self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def mul_x(self, k: int = 1) -> "XPoly":
        if not self._c:
            return self
        return XPoly._raw((RATFUNC_ZERO,) * k + self._c)

    def map_coeffs(self, fn: Callable[[RatFunc], RatFunc]) -> "XPoly":
        return XPoly._raw([fn(c) for c in self._c])

    def derivative_t(self, m: int = 1) -> "XPoly":
        return self.map_coeffs(lambda c: c.derivative(m))

    def specialize(self, t0) -> Tuple[Fraction, ...]:
        """Coefficients in ``x`` after substituting ``t = t0``."""
        vals = [c(t0) for c in self._c]
        while vals and vals[-1] == 0:
            vals.pop()
        return tuple(vals)

    def __call__(self, x0, t0) -> Fraction:
        x0 = as_fraction(x0)
        acc = Fraction(0)
        for c in reversed(self.specialize(t0)):
            acc = acc * x0 + c
        return acc

    def even_part(self) -> "XPoly":
        """``p(sqrt(x))`` for a polynomial with only even powers of ``x``."""
        if any(not c.is_zero() for c in self._c[1::2]):
            raise ValueError("polynomial has odd powers of x")
        return XPoly._raw(self._c[0::2])

    def odd_part(self) -> "XPoly":
        """``p(sqrt(x))/sqrt(x)`` for a polynomial with only odd powers of ``x``."""
        if any(not c.is_zero() for c in self._c[0::2]):
            raise ValueError("polynomial has even powers of x")
        return XPoly._raw(self._c[1::2])

    def subs_x_power(self, k: int) -> "XPoly":
        """``p(x^k)``."""
        out = [RATFUNC_ZERO] * (k * max(self.degree, 0) + 1)
        for i, c in enumerate(self._c):
            out[i * k] = c
        return XPoly._raw(out)


XPOLY_ZERO = XPoly._raw(())
XPOLY_ONE = XPoly._raw((RATFUNC_ONE,))
X = XPoly.x()


CoefSeq = Callable[[int], RatFunc]


@dataclass(frozen=True, eq=False)
class Recurrence:
    """Recurrence ``p_n = (x - s(n-1)) p_{n-1} - t(n-2) p_{n-2}``.

    ``p1`` defaults to ``(x - s(0)) p0``, i.e. the ``p_{-1} = 0`` convention.
    """

    s_seq: CoefSeq
    t_seq: CoefSeq
    p0: XPoly = XPOLY_ONE
    p1: Optional[XPoly] = None
    name: str = ""
    _memo: List[XPoly] = field(default_factory=list, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def s(self, k: int) -> RatFunc:
        return _checked(self.s_seq, k, self.name, "s")

    def t(self, k: int) -> RatFunc:
        return _checked(self.t_seq, k, self.name, "t")


def _checked(seq: CoefSeq, k: int, name: str, which: str) -> RatFunc:
    try:
        return _rf(seq(k))
    except ZeroDivisionError as exc:
        raise PoleInCoefficient(f"{name or 'recurrence'}: {which}({k}) has a zero denominator") from exc


def run_recurrence(r: Recurrence, n: int) -> XPoly:
    """The member ``p_n`` of the family defined by ``r``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    memo = r._memo
    if n < len(memo):
        return memo[n]
    with r._lock:
        if not memo:
            memo.append(r.p0)
        if len(memo) == 1 and n >= 1:
            memo.append(r.p1 if r.p1 is not None else (X - r.s(0)) * r.p0)
        while len(memo) <= n:
            m = len(memo)
            memo.append((X - r.s(m - 1)) * memo[m - 1] - memo[m - 2] * r.t(m - 2))
    return memo[n]


def evaluate_recurrence(r: Recurrence, n_max: int, x0, t0) -> List[Fraction]:
    """Values ``p_0(x0, t0), ..., p_{n_max}(x0, t0)`` from the scalar recurrence."""
    x0, t0 = as_fraction(x0), as_fraction(t0)
    vals = [r.p0(x0, t0)]
    if n_max >= 1:
        vals.append(r.p1(x0, t0) if r.p1 is not None else (x0 - r.s(0)(t0)) * vals[0])
    for m in range(2, n_max + 1):
        vals.append((x0 - r.s(m - 1)(t0)) * vals[m - 1] - r.t(m - 2)(t0) * vals[m - 2])
    return vals[: n_max + 1]


# ---------------------------------------------------------------- coefficient sequences

def _const(c) -> CoefSeq:
    v = _rf(c)
    return lambda k: v


@lru_cache(maxsize=None)
def tau_a(k: int) -> RatFunc:
    """``1, t, 1, t, ...``"""
    return RATFUNC_ONE if k % 2 == 0 else RatFunc.of(T)


@lru_cache(maxsize=None)
def tau_b(k: int) -> RatFunc:
    """Type-B ``tau``: ``1+t``, then ``t(1+t^n)/(1+t^{n+1})`` and ``(1+t^{n+1})/(1+t^n)``."""
    if k == 0:
        return RatFunc.of(1 + T)
    n, odd = divmod(k, 2)
    if odd:
        return RatFunc(T * (1 + T ** n), 1 + T ** (n + 1))
    return RatFunc(1 + T ** (n + 1), 1 + T ** n)


@lru_cache(maxsize=None)
def tau_b_recursive(k: int) -> RatFunc:
    """Type-B ``tau`` from ``tau_{2n} = 1+t - tau_{2n-1}`` and ``tau_{2n+1} = t/tau_{2n}``."""
    if k == 0:
        return RatFunc.of(1 + T)
    if k == 1:
        return RatFunc(2 * T, 1 + T)
    if k % 2 == 0:
        return RatFunc.of(1 + T) - tau_b_recursive(k - 1)
    return RatFunc.of(T) / tau_b_recursive(k - 1)


@lru_cache(maxsize=None)
def big_t(k: int) -> RatFunc:
    """``2t`` at 0, ``t`` afterwards."""
    return RatFunc.of(2 * T if k == 0 else T)


@lru_cache(maxsize=None)
def sigma_a(k: int) -> RatFunc:
    return RATFUNC_ONE if k == 0 else RatFunc.of(1 + T)


@lru_cache(maxsize=None)
def sigma_b(k: int) -> RatFunc:
    if k == 0:
        return RatFunc(IntPoly([1, 4, 1]), 1 + T)
    return RatFunc(1 + T ** (k + 1), 1 + T ** k) + RatFunc(T * (1 + T ** k), 1 + T ** (k + 1))


@lru_cache(maxsize=None)
def s_family_t(k: int) -> RatFunc:
    """Second-order coefficient of the odd type-B split: ``t(1+t^k)(1+t^{k+2})/(1+t^{k+1})^2``."""
    return RatFunc(T * (1 + T ** k) * (1 + T ** (k + 2)), (1 + T ** (k + 1)) ** 2)


def lucas_tau(k: int) -> RatFunc:
    return RatFunc.of(2 if k == 0 else 1)


COEF_SEQS: Dict[str, CoefSeq] = {
    "tau_a": tau_a,
    "tau_b": tau_b,
    "tau_b_recursive": tau_b_recursive,
    "T": big_t,
    "sigma_a": sigma_a,
    "sigma_b": sigma_b,
    "s_family_t": s_family_t,
    "lucas_tau": lucas_tau,
}


_ZERO_SEQ = _const(0)

FIB = Recurrence(_ZERO_SEQ, _const(1), name="fib")
FIB_T = Recurrence(_ZERO_SEQ, tau_a, name="fib-t")
Q_REC = Recurrence(_const(1 + T), _const(T), name="q")
P_REC = Recurrence(sigma_a, _const(T), name="p")
LUCAS = Recurrence(_ZERO_SEQ, lucas_tau, name="lucas")
LUCAS_T = Recurrence(_ZERO_SEQ, tau_b, name="lucas-t")
R_REC = Recurrence(_const(1 + T), big_t, name="r")
S_REC = Recurrence(sigma_b, s_family_t, name="s")


def fib(n: int) -> XPoly:
    """``F_n(x) = f_{n+1}(x, -1)``."""
    return run_recurrence(FIB, n)


def fib_t(n: int) -> XPoly:
    return run_recurrence(FIB_T, n)


def q_poly(n: int) -> XPoly:
    return run_recurrence(Q_REC, n)


def p_poly(n: int) -> XPoly:
    return run_recurrence(P_REC, n)


def lucas(n: int) -> XPoly:
    """``L_n(x)`` with ``L_0 = 1``."""
    return run_recurrence(LUCAS, n)


def lucas_t(n: int) -> XPoly:
    return run_recurrence(LUCAS_T, n)


def r_poly(n: int) -> XPoly:
    """``R_n(x, t)`` with ``R_0 = 1``."""
    return run_recurrence(R_REC, n)


def s_poly(n: int) -> XPoly:
    return run_recurrence(S_REC, n)


def fib_p(n: int) -> XPoly:
    """``F_{2n}(sqrt x)``."""
    return run_recurrence(_split(FIB)[0], n)


def fib_q(n: int) -> XPoly:
    """``F_{2n+1}(sqrt x)/sqrt x``."""
    return run_recurrence(_split(FIB)[1], n)


def lucas_r(n: int) -> XPoly:
    """``L_{2n}(sqrt x)``."""
    return run_recurrence(_split(LUCAS)[0], n)


def lucas_s(n: int) -> XPoly:
    """``L_{2n+1}(sqrt x)/sqrt x``."""
    return run_recurrence(_split(LUCAS)[1], n)


FAMILIES: Dict[str, Callable[[int], XPoly]] = {
    "fib": fib,
    "fib-t": fib_t,
    "q": q_poly,
    "p": p_poly,
    "lucas": lucas,
    "lucas-t": lucas_t,
    "r": r_poly,
    "s": s_poly,
}


# ---------------------------------------------------------------- splitting

def split_even_odd(rec: Recurrence, check_terms: int = 32) -> Tuple[Recurrence, Recurrence]:
    """Recurrences for ``p_{2n}(sqrt x)`` and ``p_{2n+1}(sqrt x)/sqrt x``.

    Requires ``s_k = 0`` (checked on the first ``check_terms`` indices).  With the
    original second-order coefficients ``t_k`` the even family has
    ``s'_0 = t_0``, ``s'_k = t_{2k-1} + t_{2k}``, ``t'_k = t_{2k} t_{2k+1}``, and the
    odd family has ``s'_k = t_{2k} + t_{2k+1}``, ``t'_k = t_{2k+1} t_{2k+2}``.
    """
    for k in range(check_terms):
        if not rec.s(k).is_zero():
            raise NonzeroSRejected(f"s({k}) = {rec.s(k)} is not zero")
    tt = rec.t

    @lru_cache(maxsize=None)
    def even_s(k: int) -> RatFunc:
        return tt(0) if k == 0 else tt(2 * k - 1) + tt(2 * k)

    @lru_cache(maxsize=None)
    def even_t(k: int) -> RatFunc:
        return tt(2 * k) * tt(2 * k + 1)

    @lru_cache(maxsize=None)
    def odd_s(k: int) -> RatFunc:
        return tt(2 * k) + tt(2 * k + 1)

    @lru_cache(maxsize=None)
    def odd_t(k: int) -> RatFunc:
        return tt(2 * k + 1) * tt(2 * k + 2)

    base = rec.name or "family"
    return (
        Recurrence(even_s, even_t, name=f"{base}/even"),
        Recurrence(odd_s, odd_t, name=f"{base}/odd"),
    )


_SPLITS: Dict[str, Tuple[Recurrence, Recurrence]] = {}
_SPLIT_LOCK = threading.Lock()


def _split(rec: Recurrence) -> Tuple[Recurrence, Recurrence]:
    with _SPLIT_LOCK:
        if rec.name not in _SPLITS:
            _SPLITS[rec.name] = split_even_odd(rec)
        return _SPLITS[rec.name]


# ---------------------------------------------------------------- explicit formulas

def fibonacci_general(n: int, s=None) -> XPoly:
    """``f_n(x, s)`` from its binomial sum.

    With ``s=None`` the second variable is kept symbolic and carried in the
    coefficient ring, i.e. the result is a polynomial in ``x`` whose
    coefficients are polynomials in ``s`` (written with the ring variable ``t``).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    sv = T if s is None else as_fraction(s)
    out: Dict[int, RatFunc] = {}
    for k in range((n - 1) // 2 + 1 if n >= 1 else 0):
        c = binom(n - 1 - k, k)
        term = _rf(c) * (_rf(sv) ** k if s is None else RatFunc.of(sv ** k))
        out[n - 1 - 2 * k] = term
    if not out:
        return XPOLY_ZERO
    return XPoly([out.get(i, RATFUNC_ZERO) for i in range(max(out) + 1)])


def fibonacci_recurrence(n: int, s=None) -> XPoly:
    """``f_n(x, s)`` from ``f_n = x f_{n-1} + s f_{n-2}``, ``f_0 = 0``, ``f_1 = 1``."""
    sv = RatFunc.of(T) if s is None else RatFunc.of(as_fraction(s))
    prev, cur = XPOLY_ZERO, XPOLY_ONE
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, X * cur + prev * sv
    return cur


def _check_kn(n: int, k: int) -> None:
    if not 0 <= k <= n:
        raise IndexOutOfTriangle(f"(n, k) = ({n}, {k}) is outside 0 <= k <= n")


def coef_closed_q(n: int, k: int) -> IntPoly:
    """``q_{n,k}(t) = sum_j binom(n-j, k) binom(k+j, j) t^j``."""
    _check_kn(n, k)
    return IntPoly([binom(n - j, k) * binom(k + j, j) for j in range(n - k + 1)])


def coef_closed_p(n: int, k: int) -> IntPoly:
    """``p_{n,k}(t) = sum_j binom(n-j, k) binom(k-1+j, j) t^j``."""
    _check_kn(n, k)
    return IntPoly([binom(n - j, k) * binom(k - 1 + j, j) for j in range(n - k + 1)])


def coef_closed_F(n: int, k: int) -> IntPoly:
    """Signed coefficient of ``x^{n-2k}`` in ``F_n(x, t)``."""
    if n < 0 or not 0 <= 2 * k <= n:
        raise IndexOutOfTriangle(f"(n, k) = ({n}, {k}) needs 0 <= 2k <= n")
    h, g = n // 2, (n - 1) // 2
    c = IntPoly([binom(h - j, k - j) * binom(g - k + j, j) for j in range(k + 1)])
    return -c if k % 2 else c


def coef_closed_R(n: int, printed_constant: bool = False) -> XPoly:
    """``R_n(x, t)`` for ``n > 0`` from its explicit double sum.

    The constant term is ``(-1)^n (1 + t^n)``, the value at ``x = 0`` of
    ``alpha^n + beta^n`` with roots ``-1`` and ``-t``.  ``printed_constant=True``
    uses ``(-1)^n (1 + t)^n`` instead, which only agrees for ``n = 1``; it is kept
    so the discrepancy can be demonstrated.
    """
    if n <= 0:
        raise ValueError("the explicit formula needs n > 0")
    const = (1 + T) ** n if printed_constant else 1 + T ** n
    coeffs: List[RatFunc] = [RatFunc.of(const * (-1) ** n)]
    for ell in range(1, n + 1):
        inner = []
        for j in range(n - ell + 1):
            v = Fraction(binom(n, ell) * binom(n - ell, j) * binom(ell + j - 1, j), binom(n - 1, j))
            if v.denominator != 1:
                raise NonIntegerQuotient(f"non-integer coefficient {v} at n={n}, l={ell}, j={j}")
            inner.append(v.numerator)
        coeffs.append(RatFunc.of(IntPoly(inner) * (-1) ** (n - ell)))
    return XPoly(coeffs)


def g_coef(n: int, k: int) -> IntPoly:
    """``G_{n,k}(t)``, the numerators of the ``S_n`` coefficients."""
    _check_kn(n, k)
    if k == 0:
        return IntPoly.monomial(2 * n + 1, n) + IntPoly([1] * (2 * n + 1))
    out = [0] * (2 * n - k + 1)
    for j in range(n - k + 1):
        v = Fraction(binom(j + k, k) * binom(n - j - 1, k - 1) * (n * (k + 1) - j), k * (k + 1))
        if v.denominator != 1:
            raise NonIntegerQuotient(f"G coefficient {v} at n={n}, k={k}, j={j}")
        out[j] += v.numerator
        out[2 * n - k - j] += v.numerator
    return IntPoly(out)


def coef_closed_S(n: int, k: int) -> RatFunc:
    """Coefficient of ``x^k`` in ``S_n(x, t)``: ``(-1)^{n-k} G_{n,k}(t) / (1 + t^n)``."""
    g = g_coef(n, k)
    return RatFunc(g if (n - k) % 2 == 0 else -g, 1 + T ** n)


def s_closed(n: int) -> XPoly:
    return XPoly([coef_closed_S(n, k) for k in range(n + 1)])


def q_closed(n: int) -> XPoly:
    return XPoly([RatFunc.of(coef_closed_q(n, k) * (-1) ** (n - k)) for k in range(n + 1)])


def p_closed(n: int) -> XPoly:
    return XPoly([RatFunc.of(coef_closed_p(n, k) * (-1) ** (n - k)) for k in range(n + 1)])


def fib_t_closed(n: int) -> XPoly:
    coeffs = [RATFUNC_ZERO] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = RatFunc.of(coef_closed_F(n, k))
    return XPoly(coeffs)


# ---------------------------------------------------------------- periodicity

_PERIODIC_FAMILIES = {"F": FIB_T, "R": R_REC}


def periodic_check(
    family: str,
    t0: int,
    scale_base: int,
    scale_period: int,
    claimed_period: int,
    n_max: int,
    r0: Optional[int] = None,
) -> Tuple[bool, Optional[dict]]:
    """Test whether ``p_n(1, t0) / scale_base^floor(n/scale_period)`` has the claimed period.

    ``family`` is ``"F"`` (``F_n(x, t)``) or ``"R"`` (``R_n(x, t)``); ``r0`` overrides
    the value at ``n = 0`` (the Lucas-style convention ``R_0 = 2``).  Returns
    ``(True, None)`` or ``(False, witness)`` with the first violating index.
    """
    seq = scaled_sequence(family, t0, scale_base, scale_period, n_max, r0)
    for n in range(claimed_period, len(seq)):
        if seq[n] != seq[n - claimed_period]:
            return False, {"n": n, "value": seq[n], "expected": seq[n - claimed_period], "sequence": seq}
    return True, None


def scaled_sequence(family: str, t0: int, scale_base: int, scale_period: int, n_max: int,
                    r0: Optional[int] = None) -> List[int]:
    """``p_n(1, t0) / scale_base^floor(n/scale_period)`` for ``n <= n_max``; exact or raises."""
    rec = _PERIODIC_FAMILIES[family]
    vals = evaluate_recurrence(rec, n_max, 1, t0)
    if r0 is not None:
        vals[0] = Fraction(r0)
    out = []
    for n, v in enumerate(vals):
        q = v / Fraction(scale_base) ** (n // scale_period)
        if q.denominator != 1:
            raise NonIntegerQuotient(
                f"{family}_{n}(1,{t0}) = {v} is not divisible by {scale_base}^{n // scale_period}"
            )
        out.append(q.numerator)
    return out
