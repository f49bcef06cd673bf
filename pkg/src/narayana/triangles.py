"""Catalan-Stieltjes triangles and moments.

For a family with recurrence coefficients ``s_k, t_k`` the triangle ``a(n, k)``
is defined by ``x^n = sum_k a(n, k) p_k(x)`` and obeys

    a(n, k) = a(n-1, k-1) + s_k a(n-1, k) + t_k a(n-1, k+1),   a(0, k) = [k = 0].

Every named triangle can be built three ways: by that recursion, by its
explicit formula, and by solving the triangular system against the family
polynomials (:func:`expand_monomial`).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Sequence, Tuple

from .arith import ONE, T, ZERO, IntPoly, RatFunc, RATFUNC_ONE, RATFUNC_ZERO, binom
from .families import (
    FIB,
    FIB_T,
    LUCAS,
    LUCAS_T,
    P_REC,
    Q_REC,
    R_REC,
    S_REC,
    IndexOutOfTriangle,
    NonIntegerQuotient,
    Recurrence,
    XPoly,
    X,
    _split,
    run_recurrence,
    tau_b,
)

__all__ = [
    "Triangle",
    "SingularLeadingCoefficient",
    "RECURRENCES",
    "FUNCTIONALS",
    "stieltjes_from_recurrence",
    "triangle",
    "expand_monomial",
    "expansion_triangle",
    "ballot_closed",
    "b_closed",
    "a_closed",
    "d_closed",
    "d_by_extraction",
    "e_closed",
    "e_from_d",
    "e_cleared",
    "closed_triangle",
    "moments",
    "narayana",
    "narayana_b",
]


class SingularLeadingCoefficient(ArithmeticError):
    pass


@dataclass(frozen=True)
class Triangle:
    """Rows ``0..n_max`` of a lower-triangular array of rational functions."""

    tag: str
    rows: Tuple[Tuple[RatFunc, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> RatFunc:
        if n < 0 or n > self.n_max:
            raise IndexOutOfTriangle(f"row {n} not materialized (n_max={self.n_max})")
        if k < 0 or k > n:
            return RATFUNC_ZERO
        return self.rows[n][k]

    def row(self, n: int) -> Tuple[RatFunc, ...]:
        return self.rows[n]

    def column(self, k: int) -> List[RatFunc]:
        return [self.entry(n, k) for n in range(self.n_max + 1)]

    def specialize(self, t0) -> List[List[Fraction]]:
        return [[e(t0) for e in row] for row in self.rows]

    def truncate(self, n_max: int) -> "Triangle":
        return Triangle(self.tag, self.rows[: n_max + 1])

    def __iter__(self):
        return iter(self.rows)


RECURRENCES: Dict[str, Recurrence] = {
    "BALLOT": FIB,
    "LUCAS1": LUCAS,
    "B": Q_REC,
    "A": P_REC,
    "D": R_REC,
    "E": S_REC,
    "FIB_T": FIB_T,
    "LUCAS_T": LUCAS_T,
}


def _split_tags() -> None:
    fp, fq = _split(FIB)
    lr, ls = _split(LUCAS)
    RECURRENCES.update({"FIB_P": fp, "FIB_Q": fq, "LUCAS_R": lr, "LUCAS_S": ls})


_split_tags()

# linear functional name -> basis whose triangle carries its moments in column 0
FUNCTIONALS: Dict[str, str] = {
    "L": "FIB_T",
    "L0": "A",
    "L1": "B",
    "M": "LUCAS_T",
    "M0": "D",
    "M1": "E",
    "L-classic": "BALLOT",
    "L0-classic": "FIB_P",
    "L1-classic": "FIB_Q",
    "M-classic": "LUCAS1",
    "M0-classic": "LUCAS_R",
    "M1-classic": "LUCAS_S",
}


def _next_row(prev: Sequence[RatFunc], s_seq, t_seq) -> Tuple[RatFunc, ...]:
    n = len(prev)
    out = []
    for k in range(n + 1):
        v = prev[k - 1] if k >= 1 else RATFUNC_ZERO
        if k < n and not prev[k].is_zero():
            v = v + s_seq(k) * prev[k]
        if k + 1 < n and not prev[k + 1].is_zero():
            v = v + t_seq(k) * prev[k + 1]
        out.append(v)
    return tuple(out)


def stieltjes_from_recurrence(s_seq: Callable[[int], RatFunc], t_seq: Callable[[int], RatFunc],
                              n_max: int, tag: str = "custom") -> Triangle:
    """Rows ``0..n_max`` of the Catalan-Stieltjes triangle of ``(s_k, t_k)``."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    rows = [(RATFUNC_ONE,)]
    for _ in range(n_max):
        rows.append(_next_row(rows[-1], s_seq, t_seq))
    return Triangle(tag, tuple(rows))


_ROW_CACHE: Dict[str, List[Tuple[RatFunc, ...]]] = {}
_ROW_LOCK = threading.Lock()


def triangle(tag: str, n_max: int) -> Triangle:
    """Named triangle by the recursion; rows are cached per tag and never change."""
    tag = tag.upper()
    try:
        rec = RECURRENCES[tag]
    except KeyError:
        raise KeyError(f"unknown triangle {tag!r}; known: {sorted(RECURRENCES)}") from None
    with _ROW_LOCK:
        rows = _ROW_CACHE.setdefault(tag, [(RATFUNC_ONE,)])
        while len(rows) <= n_max:
            rows.append(_next_row(rows[-1], rec.s, rec.t))
        return Triangle(tag, tuple(rows[: n_max + 1]))


def _basis(basis) -> Callable[[int], XPoly]:
    if isinstance(basis, str):
        rec = RECURRENCES[basis.upper()]
        return lambda k: run_recurrence(rec, k)
    if callable(basis):
        return basis
    seq = list(basis)
    return lambda k: seq[k]


def expand_monomial(basis, n: int) -> Tuple[RatFunc, ...]:
    """Coefficients ``c_0..c_n`` with ``x^n = sum_k c_k p_k(x)``, by back-substitution.

    ``basis`` is a triangle tag, a callable ``k -> XPoly`` or a sequence of
    polynomials; ``p_k`` must have exact degree ``k``.
    """
    get = _basis(basis)
    residual = X ** n if n else XPoly.constant(1)
    coeffs = [RATFUNC_ZERO] * (n + 1)
    for k in range(n, -1, -1):
        pk = get(k)
        if pk.degree != k:
            raise SingularLeadingCoefficient(f"basis polynomial {k} has degree {pk.degree}")
        c = residual.coeff(k) / pk.coeff(k)
        coeffs[k] = c
        if not c.is_zero():
            residual = residual - pk * c
    if not residual.is_zero():
        raise SingularLeadingCoefficient("triangular solve left a residual")
    return tuple(coeffs)


def expansion_triangle(basis, n_max: int, tag: str = "") -> Triangle:
    """The triangle obtained by expanding ``x^0..x^{n_max}`` in ``basis``."""
    return Triangle(tag or f"expand:{basis}", tuple(expand_monomial(basis, n) for n in range(n_max + 1)))


# ---------------------------------------------------------------- explicit formulas

def _check(n: int, k: int) -> None:
    if n < 0 or not 0 <= k <= n:
        raise IndexOutOfTriangle(f"(n, k) = ({n}, {k}) is outside 0 <= k <= n")


def _integral(values, what: str) -> IntPoly:
    out = []
    for v in values:
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise NonIntegerQuotient(f"{what}: coefficient {v} is not an integer")
            v = v.numerator
        out.append(v)
    return IntPoly(out)


def ballot_closed(n: int, k: int) -> int:
    """Ballot number ``a(n, k)``: ``binom(n, m) - binom(n, m-1)`` with ``n = 2m + k``."""
    if k < 0 or k > n or (n - k) % 2:
        return 0
    m = (n - k) // 2
    return binom(n, m) - binom(n, m - 1)


def b_closed(n: int, k: int, form: int = 1) -> IntPoly:
    _check(n, k)
    if form == 1:
        return _integral(
            [Fraction(binom(n + 1, k + 1 + j) * binom(n + 1, j) * (k + 1), n + 1) for j in range(n + 1)],
            f"B[{n},{k}]",
        )
    return IntPoly([binom(n, j) * binom(n + 1, k + j + 1) - binom(n + 1, j) * binom(n, k + j + 1)
                    for j in range(n + 1)])


def a_closed(n: int, k: int, form: int = 1) -> IntPoly:
    _check(n, k)
    if n == 0:
        return ONE
    if form == 1:
        terms = []
        for j in range(n - k + 1):
            b = binom(n - 1, j)
            if b == 0:
                terms.append(Fraction(0))
                continue
            terms.append(Fraction(b * binom(n, k + j) * (k * n + n - j), (n - j) * (k + 1 + j)))
        return _integral(terms, f"A[{n},{k}]")
    return IntPoly([binom(n - 1, j) * binom(n + 1, k + j + 1) - binom(n, j) * binom(n, k + j + 1)
                    for j in range(n - k + 1)])


def d_closed(n: int, k: int) -> IntPoly:
    _check(n, k)
    return IntPoly([binom(n, j) * binom(n, k + j) for j in range(n + 1)])


@lru_cache(maxsize=None)
def _trinomial_power(n: int) -> Tuple[IntPoly, ...]:
    # coefficients (in x) of (1 + (1+t)x + t x^2)^n, each an IntPoly in t
    cur: List[IntPoly] = [ONE]
    step = (ONE, 1 + T, T)
    for _ in range(n):
        nxt = [ZERO] * (len(cur) + 2)
        for i, c in enumerate(cur):
            for j, s in enumerate(step):
                nxt[i + j] = nxt[i + j] + c * s
        cur = nxt
    return tuple(cur)


def d_by_extraction(n: int, k: int) -> IntPoly:
    """``[x^{n-k}] (1 + (1+t) x + t x^2)^n``."""
    _check(n, k)
    return _trinomial_power(n)[n - k]


def e_closed(n: int, k: int) -> RatFunc:
    if k > n:
        return RATFUNC_ZERO
    _check(n, k)
    num = [0] * (n + 2)
    for j in range(n - k + 1):
        c = binom(n, k + j) * binom(n + 1, j)
        num[j] += c
        num[n + 1 - j] += c
    return RatFunc(IntPoly(num), 1 + T ** (k + 1))


def e_from_d(n: int, k: int) -> RatFunc:
    """``D_{n,k} + tau_{2k+1} D_{n,k+1}`` with the type-B ``tau``."""
    _check(n, k)
    nxt = d_closed(n, k + 1) if k + 1 <= n else ZERO
    return RatFunc.of(d_closed(n, k)) + tau_b(2 * k + 1) * nxt


def e_cleared(n: int, k: int) -> IntPoly:
    """``(1 + t^{k+1}) E_{n,k}(t)``, which is a polynomial."""
    return (e_closed(n, k) * (1 + T ** (k + 1))).as_intpoly()


_CLOSED = {
    "B": lambda n, k: RatFunc.of(b_closed(n, k)),
    "A": lambda n, k: RatFunc.of(a_closed(n, k)),
    "D": lambda n, k: RatFunc.of(d_closed(n, k)),
    "E": e_closed,
    "BALLOT": lambda n, k: RatFunc.of(ballot_closed(n, k)),
    "LUCAS1": lambda n, k: RatFunc.of(
        binom(n, (n - k) // 2) if (n - k) % 2 == 0 else 0
    ),
}


def closed_triangle(tag: str, n_max: int) -> Triangle:
    """Named triangle from its explicit entry formula."""
    f = _CLOSED[tag.upper()]
    return Triangle(tag.upper(), tuple(tuple(f(n, k) for k in range(n + 1)) for n in range(n_max + 1)))


# ---------------------------------------------------------------- moments

def narayana(n: int) -> IntPoly:
    """``C_n(t)``; ``C_0 = 1``."""
    if n == 0:
        return ONE
    return _integral([Fraction(binom(n - 1, k) * binom(n, k), k + 1) for k in range(n)], f"C_{n}")


def narayana_b(n: int) -> IntPoly:
    """``M_n(t) = sum_k binom(n, k)^2 t^k``."""
    return IntPoly([binom(n, k) ** 2 for k in range(n + 1)])


def moments(functional: str, n_max: int) -> List[RatFunc]:
    """Moments ``F(x^0), ..., F(x^{n_max})`` of a named linear functional.

    The functional is the one killing every basis polynomial except ``p_0``;
    its moments form column 0 of the basis triangle.
    """
    tag = FUNCTIONALS.get(functional, functional)
    return triangle(tag, n_max).column(0)
