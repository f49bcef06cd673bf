"""Registry of runnable identity checks.

Each check compares two independent computations over a parameter range and
returns a :class:`Verdict`.  A failing verdict always carries a witness: the
parameters and both sides, rendered exactly.  Checks flagged ``conjecture``
report evidence rather than a must-pass result.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from . import families as fam
from .arith import ONE, T, ZERO, IntPoly, RatFunc, binom
from .families import X, XPOLY_ZERO, XPoly
from .paths import (
    BudgetExceeded,
    bijection_check,
    count_ballot_words,
    count_nsew_endpoint,
    enumerate_weight,
    gamma_closed_B,
    gamma_closed_C,
    gamma_closed_D,
    gamma_expand,
    nsew_endpoint_closed,
)
from .render import render_value
from .series import (
    TSeries,
    central_binom_convolution,
    central_binom_convolution_brute,
    column_gf_check,
    convolution_c,
    convolution_u,
    derivative_shift_check,
    fib_t_gf_check,
    solve_catalan_gf,
    solve_gf,
    ts_mul,
    ts_pow,
    u2_closed_check,
    u3_closed_check,
    u_gamma,
)
from .triangles import (
    a_closed,
    b_closed,
    ballot_closed,
    d_by_extraction,
    d_closed,
    e_closed,
    e_from_d,
    expand_monomial,
    moments,
    narayana,
    narayana_b,
    triangle,
)

__all__ = [
    "Verdict",
    "IdentityCheck",
    "UnknownIdentity",
    "DegenerateRange",
    "run_check",
    "run_all",
    "list_checks",
    "corollary_2_26",
    "conjecture_1",
    "delannoy_div3",
]

Witness = Optional[dict]
Outcome = Tuple[bool, Witness]


class UnknownIdentity(KeyError):
    pass


class DegenerateRange(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    id: str
    status: str  # pass | fail | budget-exceeded
    ranges: Dict[str, int]
    witness: Witness = None
    elapsed_ms: float = 0.0
    conjecture: bool = False
    evidence: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def record(self) -> dict:
        out = {
            "id": self.id,
            "status": self.status,
            "ranges": {k: v for k, v in self.ranges.items() if v is not None},
            "witness": self.witness,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.conjecture:
            out["conjecture"] = True
        if self.evidence:
            out["evidence"] = self.evidence
        return out


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    description: str
    defaults: Dict[str, int]
    runner: Callable[..., Outcome]
    conjecture: bool = False


_REGISTRY: Dict[str, IdentityCheck] = {}


def check(cid: str, description: str, conjecture: bool = False, **defaults):
    def deco(fn):
        if cid in _REGISTRY:
            raise ValueError(f"duplicate check id {cid}")
        _REGISTRY[cid] = IdentityCheck(cid, description, defaults, fn, conjecture)
        return fn

    return deco


def list_checks() -> List[IdentityCheck]:
    return list(_REGISTRY.values())


def run_check(cid: str, overrides: Optional[Dict[str, int]] = None) -> Verdict:
    """Run one registered check; ``overrides`` replaces default ranges it accepts."""
    try:
        chk = _REGISTRY[cid]
    except KeyError:
        raise UnknownIdentity(cid) from None
    params = dict(chk.defaults)
    for k, v in (overrides or {}).items():
        if k in params and v is not None:
            params[k] = v
    start = time.perf_counter()
    evidence = None
    try:
        result = chk.runner(**params)
        if len(result) == 3:
            ok, witness, evidence = result
        else:
            ok, witness = result
        status = "pass" if ok else "fail"
        if not ok and witness is None:
            witness = {"reason": "no witness recorded"}
    except BudgetExceeded as exc:
        status, witness = "budget-exceeded", {"reason": str(exc)}
    except (ArithmeticError, ValueError) as exc:
        status, witness = "fail", {"error": type(exc).__name__, "message": str(exc)}
    elapsed = (time.perf_counter() - start) * 1000
    return Verdict(cid, status, params, witness, elapsed, chk.conjecture, evidence)


def run_all(ids: Optional[Iterable[str]] = None, overrides: Optional[Dict[str, int]] = None) -> List[Verdict]:
    return [run_check(c, overrides) for c in (ids if ids is not None else _REGISTRY)]


# ---------------------------------------------------------------- helpers

def _show(v) -> str:
    if isinstance(v, (XPoly, TSeries)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_show(e) for e in v) + "]"
    return render_value(v)


def _compare(items: Iterable[Tuple[dict, object, object]]) -> Outcome:
    """First ``(params, lhs, rhs)`` with ``lhs != rhs`` becomes the witness."""
    for params, lhs, rhs in items:
        if lhs != rhs:
            return False, {**params, "lhs": _show(lhs), "rhs": _show(rhs)}
    return True, None


def _all(*outcomes: Outcome) -> Outcome:
    for ok, w in outcomes:
        if not ok:
            return ok, w
    return True, None


def _rf(v) -> RatFunc:
    return RatFunc.of(v)


def _xsum(terms: Iterable[Tuple[object, XPoly]]) -> XPoly:
    out = XPOLY_ZERO
    for c, p in terms:
        c = c if isinstance(c, RatFunc) else RatFunc.of(c)
        if not c.is_zero():
            out = out + p * c
    return out


def _catalan(n: int) -> int:
    return binom(2 * n, n) // (n + 1)


def _half_x(p: XPoly, odd: bool) -> XPoly:
    """``p(sqrt x)`` for even ``p``, ``p(sqrt x)/sqrt x`` for odd ``p``."""
    return p.odd_part() if odd else p.even_part()


# ---------------------------------------------------------------- section 1: classical case

@check("eq-1.1", "Catalan-Stieltjes recursion equals triangular-solve expansion for every basis", n_max=8)
def _(n_max):
    tags = ["BALLOT", "LUCAS1", "A", "B", "D", "E", "FIB_T", "LUCAS_T", "FIB_P", "FIB_Q", "LUCAS_R", "LUCAS_S"]
    return _compare(
        ({"tag": tag, "n": n}, triangle(tag, n_max).row(n), expand_monomial(tag, n))
        for tag in tags for n in range(n_max + 1)
    )


@check("eq-1.3", "ballot numbers: recursion, closed form and word enumeration agree", n_max=14)
def _(n_max):
    tri = triangle("BALLOT", n_max)
    return _compare(
        ({"n": n, "k": k}, (tri.entry(n, k), ballot_closed(n, k)), (_rf(count_ballot_words(n, k)), count_ballot_words(n, k)))
        for n in range(n_max + 1) for k in range(n + 1)
    )


@check("eq-1.4", "x^n expands in F_{n-2k}(x) with ballot coefficients", n_max=12)
def _(n_max):
    return _compare(
        ({"n": n}, _xsum((binom(n, k) - binom(n, k - 1), fam.fib(n - 2 * k)) for k in range(n // 2 + 1)), X ** n)
        for n in range(n_max + 1)
    )


@check("eq-1.5", "even moments of the F(x) functional are Catalan numbers, odd ones vanish", n_max=20)
def _(n_max):
    mom = moments("L-classic", n_max)
    return _compare(
        ({"n": n}, mom[n], _rf(_catalan(n // 2) if n % 2 == 0 else 0)) for n in range(n_max + 1)
    )


@check("eq-1.8", "z^2-Catalan series: coefficients and ballot column 0", order=16)
def _(order):
    f = solve_gf("CATALAN_Z2", order)
    col = triangle("BALLOT", order).column(0)
    return _all(
        _compare(({"n": n}, f[n], IntPoly([_catalan(n // 2)]) if n % 2 == 0 else ZERO) for n in range(order + 1)),
        _compare(({"n": n, "ballot column": True}, col[n], _rf(f[n])) for n in range(order + 1)),
    )


@check("eq-1.9", "P_n(x) from the split equals its binomial sum", n_max=10)
def _(n_max):
    return _compare(
        ({"n": n}, fam.fib_p(n),
         XPoly([binom(n + k, 2 * k) * (-1) ** (n - k) for k in range(n + 1)]))
        for n in range(n_max + 1)
    )


@check("eq-1.10", "Q_n(x) from the split equals its binomial sum and F_{2n+1}(sqrt x)/sqrt x", n_max=10)
def _(n_max):
    return _all(
        _compare(
            ({"n": n}, fam.fib_q(n), XPoly([binom(n + k + 1, 2 * k + 1) * (-1) ** (n - k) for k in range(n + 1)]))
            for n in range(n_max + 1)
        ),
        _compare(({"n": n}, fam.fib_q(n), _half_x(fam.fib(2 * n + 1), True)) for n in range(n_max + 1)),
        _compare(({"n": n}, fam.fib_p(n), _half_x(fam.fib(2 * n), False)) for n in range(n_max + 1)),
    )


@check("eq-1.11", "x^n in the P basis with coefficients binom(2n,k)-binom(2n,k-1)", n_max=10)
def _(n_max):
    return _compare(
        ({"n": n}, _xsum((binom(2 * n, k) - binom(2 * n, k - 1), fam.fib_p(n - k)) for k in range(n + 1)), X ** n)
        for n in range(n_max + 1)
    )


@check("eq-1.12", "moments of the P functional are Catalan numbers", n_max=12)
def _(n_max):
    mom = moments("L0-classic", n_max)
    return _compare(({"n": n}, mom[n], _rf(_catalan(n))) for n in range(n_max + 1))


@check("eq-1.13", "x^n in the Q basis with coefficients binom(2n+1,k)-binom(2n+1,k-1)", n_max=10)
def _(n_max):
    return _compare(
        ({"n": n}, _xsum((binom(2 * n + 1, k) - binom(2 * n + 1, k - 1), fam.fib_q(n - k)) for k in range(n + 1)),
         X ** n)
        for n in range(n_max + 1)
    )


@check("eq-1.14", "moments of the Q functional are C_{n+1}", n_max=12)
def _(n_max):
    mom = moments("L1-classic", n_max)
    return _all(
        _compare(({"n": n}, mom[n], _rf(_catalan(n + 1))) for n in range(n_max + 1)),
        _compare(({"n": n}, mom[n], _rf(binom(2 * n + 1, n) - binom(2 * n + 1, n - 1))) for n in range(n_max + 1)),
    )


@check("eq-1.15", "Narayana polynomials: sum formula, series coefficients, Catalan and Schroeder values", n_max=14)
def _(n_max):
    c = solve_catalan_gf(n_max)
    return _all(
        _compare(({"n": n}, narayana(n), c[n]) for n in range(n_max + 1)),
        _compare(({"n": n}, narayana(n)(1), _catalan(n)) for n in range(n_max + 1)),
    )


@check("eq-1.16", "F_n(x,t) at t=1 is F_n(x)", n_max=12)
def _(n_max):
    return _compare(({"n": n}, fam.fib_t(n).specialize(1), fam.fib(n).specialize(1)) for n in range(n_max + 1))


@check("eq-1.17", "generating function of F_n(x,t)", order=16)
def _(order):
    return fib_t_gf_check(order)


@check("thm-1", "moments of the F(x,t) functional: C_n(t) at even, 0 at odd powers", n_max=10)
def _(n_max):
    mom = moments("L", 2 * n_max + 1)
    return _compare(
        ({"power": j}, mom[j], _rf(narayana(j // 2)) if j % 2 == 0 else _rf(0)) for j in range(2 * n_max + 2)
    )


@check("eq-1.19", "explicit double sum for F_n(x,t)", n_max=14)
def _(n_max):
    return _compare(({"n": n}, fam.fib_t_closed(n), fam.fib_t(n)) for n in range(n_max + 1))


@check("eq-1.20", "Q_n(x,t) recurrence equals the odd split of F_n(x,t)", n_max=10)
def _(n_max):
    return _compare(({"n": n}, fam.q_poly(n), _half_x(fam.fib_t(2 * n + 1), True)) for n in range(n_max + 1))


@check("eq-1.21", "q_{n,k}(t) sum, t=1 values and palindromicity", n_max=12)
def _(n_max):
    return _all(
        _compare(({"n": n}, fam.q_closed(n), fam.q_poly(n)) for n in range(n_max + 1)),
        _compare(
            ({"n": n, "k": k}, fam.coef_closed_q(n, k)(1), binom(n + k + 1, 2 * k + 1))
            for n in range(n_max + 1) for k in range(n + 1)
        ),
        _compare(
            ({"n": n, "k": k}, fam.coef_closed_q(n, k).is_palindromic()[0], True)
            for n in range(n_max + 1) for k in range(n + 1)
        ),
    )


@check("eq-1.23", "B_{n,k}(t) recursion equals expansion in the Q basis", n_max=10)
def _(n_max):
    return _compare(({"n": n}, triangle("B", n_max).row(n), expand_monomial("B", n)) for n in range(n_max + 1))


@check("eq-1.24", "both explicit sums for B_{n,k}(t) equal the recursion", n_max=12)
def _(n_max):
    tri = triangle("B", n_max)
    return _compare(
        ({"n": n, "k": k}, (b_closed(n, k, 1), b_closed(n, k, 2)), (tri.entry(n, k).as_intpoly(),) * 2)
        for n in range(n_max + 1) for k in range(n + 1)
    )


@check("eq-1.25", "B_{n,0}(t) = C_{n+1}(t) and B_{n,k}(1) closed form", n_max=12)
def _(n_max):
    tri = triangle("B", n_max)
    return _all(
        _compare(({"n": n}, tri.entry(n, 0), _rf(narayana(n + 1))) for n in range(n_max + 1)),
        _compare(
            ({"n": n, "k": k}, tri.entry(n, k)(1),
             Fraction((2 * k + 2) * binom(2 * n + 1, n - k), n + k + 2))
            for n in range(n_max + 1) for k in range(n + 1)
        ),
    )


@check("eq-1.26", "gamma vectors of B_{n,k}(t): closed form, expansion, nonnegativity", n_max=10)
def _(n_max):
    tri = triangle("B", n_max)
    return _compare(
        ({"n": n, "k": k}, gamma_expand(tri.entry(n, k).as_intpoly(), n - k), gamma_closed_B(n, k))
        for n in range(n_max + 1) for k in range(n + 1)
    )


@check("eq-1.27", "gamma vector of C_{n+1}(t) is C_i binom(n,2i)", n_max=10)
def _(n_max):
    return _compare(
        ({"n": n}, gamma_expand(narayana(n + 1), n), gamma_closed_C(n)) for n in range(n_max + 1)
    )


@check("eq-1.28", "moments of the Q(x,t) functional are C_{n+1}(t)", n_max=10)
def _(n_max):
    mom = moments("L1", n_max)
    return _compare(({"n": n}, mom[n], _rf(narayana(n + 1))) for n in range(n_max + 1))


@check("eq-1.29", "B column-0 series solves its quadratic and has coefficients C_{n+1}(t)", order=16)
def _(order):
    f = solve_gf("B_GF", order)
    one = TSeries.of([ONE], order)
    lin = ts_mul(TSeries.of([ONE, -(1 + T)], order), f)
    quad = ts_mul(ts_mul(f, f).mul_z(2).truncate(order), TSeries.of([T], order))
    residual = one - lin + quad
    return _all(
        (residual.is_zero(), None if residual.is_zero() else {"residual": str(residual.coeffs)}),
        _compare(({"n": n}, f[n], narayana(n + 1)) for n in range(order + 1)),
    )


@check("eq-1.30", "sum_k B_{n,k}(t)(1+t+...+t^k) = (2t+2)^n", n_max=10)
def _(n_max):
    tri = triangle("B", n_max)
    return _compare(
        ({"n": n},
         sum((tri.entry(n, k).as_intpoly() * IntPoly([1] * (k + 1)) for k in range(n + 1)), ZERO),
         (2 + 2 * T) ** n)
        for n in range(n_max + 1)
    )


@check("eq-1.30-phi", "the phi involution covers every NSEW path once with weight t^i w(p)", n_max=7)
def _(n_max):
    for n in range(n_max + 1):
        ok, w = bijection_check(n)
        if not ok:
            return False, {"n": n, **w}
    return True, None


@check("paths-B", "weighted NSEW paths reproduce B_{n,k}(t)", n_max=8)
def _(n_max):
    return _paths("B", n_max)


@check("paths-A", "weighted NSEW paths without W on the axis reproduce A_{n,k}(t)", n_max=8)
def _(n_max):
    return _paths("A", n_max)


@check("paths-D", "weighted NSEW paths with doubled axis S-steps reproduce D_{n,k}(t)", n_max=8)
def _(n_max):
    return _paths("D", n_max)


@check("paths-lucas1", "N/S paths with doubled axis S-steps reproduce the Lucas triangle", n_max=12)
def _(n_max):
    return _paths("LUCAS1", n_max)


def _paths(tag: str, n_max: int) -> Outcome:
    tri = triangle(tag, n_max)
    return _compare(
        ({"scheme": tag, "n": n, "k": k}, enumerate_weight(tag, n, k), tri.entry(n, k).as_intpoly())
        for n in range(n_max + 1) for k in range(n + 1)
    )


@check("nsew-endpoint", "unweighted non-negative NSEW paths to (x, k): both closed forms", n_max=7)
def _(n_max):
    items = []
    for n in range(n_max + 1):
        for k in range(n + 1):
            for j in range(n - k + 1):
                x_end = -n + k + 2 * j
                alt = Fraction(binom(n + 1, k + 1 + j) * binom(n + 1, j) * (k + 1), n + 1)
                items.append(({"n": n, "x": x_end, "k": k},
                               (count_nsew_endpoint(n, x_end, k), nsew_endpoint_closed(n, x_end, k)),
                               (nsew_endpoint_closed(n, x_end, k), alt)))
    return _compare(items)


@check("eq-1.31", "P_n(x,t) = Q_n(x,t) + t Q_{n-1}(x,t)", n_max=12)
def _(n_max):
    return _compare(
        ({"n": n}, fam.p_poly(n), fam.q_poly(n) + fam.q_poly(n - 1) * _rf(T)) for n in range(1, n_max + 1)
    )


@check("eq-1.32", "p_{n,k}(t) sum, and p_{n,k} = q_{n,k} - t q_{n-1,k}", n_max=12)
def _(n_max):
    return _all(
        _compare(({"n": n}, fam.p_closed(n), fam.p_poly(n)) for n in range(n_max + 1)),
        _compare(
            ({"n": n, "k": k}, fam.coef_closed_p(n, k),
             fam.coef_closed_q(n, k) - (fam.coef_closed_q(n - 1, k) * T if k <= n - 1 else ZERO))
            for n in range(1, n_max + 1) for k in range(n + 1)
        ),
    )


@check("eq-1.34", "A_{n,k}(t) recursion equals expansion in the P basis", n_max=10)
def _(n_max):
    return _compare(({"n": n}, triangle("A", n_max).row(n), expand_monomial("A", n)) for n in range(n_max + 1))


@check("eq-1.35", "both explicit sums for A_{n,k}(t), and A_{n,k} + t A_{n,k+1} = B_{n,k}", n_max=12)
def _(n_max):
    a, b = triangle("A", n_max), triangle("B", n_max)
    return _all(
        _compare(
            ({"n": n, "k": k}, (a_closed(n, k, 1), a_closed(n, k, 2)), (a.entry(n, k).as_intpoly(),) * 2)
            for n in range(n_max + 1) for k in range(n + 1)
        ),
        _compare(
            ({"n": n, "k": k}, a.entry(n, k) + a.entry(n, k + 1) * _rf(T), b.entry(n, k))
            for n in range(n_max + 1) for k in range(n + 1)
        ),
    )


@check("eq-1.36", "A_{n,0}(t) = C_n(t)", n_max=12)
def _(n_max):
    tri = triangle("A", n_max)
    return _compare(({"n": n}, tri.entry(n, 0), _rf(narayana(n))) for n in range(n_max + 1))


@check("eq-1.37", "sum_k A_{n,k}(t) F_{2k}(x,t) = x^{2n} and sum_k B_{n,k}(t) F_{2k+1}(x,t) = x^{2n+1}",
       n_max=8)
def _(n_max):
    a, b = triangle("A", n_max), triangle("B", n_max)
    return _all(
        _compare(({"n": n}, _xsum((a.entry(n, k), fam.fib_t(2 * k)) for k in range(n + 1)), X ** (2 * n))
                 for n in range(n_max + 1)),
        _compare(({"n": n}, _xsum((b.entry(n, k), fam.fib_t(2 * k + 1)) for k in range(n + 1)), X ** (2 * n + 1))
                 for n in range(n_max + 1)),
    )


@check("eq-1.38", "even moments of the F(x,t) functional equal A_{n,0}(t)", n_max=10)
def _(n_max):
    mom, a = moments("L", 2 * n_max), triangle("A", n_max)
    return _compare(({"n": n}, mom[2 * n], a.entry(n, 0)) for n in range(n_max + 1))


@check("eq-1.39", "moments of the P(x,t) functional are C_n(t)", n_max=10)
def _(n_max):
    mom = moments("L0", n_max)
    return _compare(({"n": n}, mom[n], _rf(narayana(n))) for n in range(n_max + 1))


@check("eq-1.41", "C(t,z) by coefficient recursion has coefficients C_n(t); t=2 gives Schroeder numbers",
       order=16)
def _(order):
    c = solve_catalan_gf(order)
    return _all(
        _compare(({"n": n}, c[n], narayana(n)) for n in range(order + 1)),
        _compare(({"n": n}, c[n](2), narayana(n)(2)) for n in range(order + 1)),
    )


@check("eq-1.42", "column generating functions of A and B in terms of C(t,z)", order=16, k_max=4)
def _(order, k_max):
    for tag in "AB":
        for k in range(k_max + 1):
            ok, w = column_gf_check(tag, k, order)
            if not ok:
                return False, {"triangle": tag, "k": k, **w}
    return True, None


_PERIODIC = [
    # family, t0, base, period of scaling, claimed period, n_max, r0, displayed prefix
    ("F", 1, 1, 1, 6, 60, None, [1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0]),
    ("F", 2, 4, 8, 16, 96, None, [1, 1, 0, -2, -2, 2, 4, 0, -1, -1, 0, 2, 2, -2, -4, 0]),
    ("F", 3, 27, 12, 24, 96, None,
     [1, 1, 0, -3, -3, 6, 9, -9, -18, 9, 27, 0, -1, -1, 0, 3, 3, -6, -9, 9, 18, -9, -27, 0]),
    ("R", 1, 1, 1, 3, 60, 2, [2, -1, -1]),
    ("R", 2, 16, 8, 8, 96, 2, [2, -2, 0, 4, -8, 8, 0, -16]),
    ("R", 3, 729, 12, 12, 96, 2, [2, -3, 3, 0, -9, 27, -54, 81, -81, 0, 243, -729]),
]


@check("periodicity-remarks", "scaled values at x=1 are periodic with the stated periods and prefixes",
       n_max=96)
def _(n_max):
    for family, t0, base, sp, period, default_n, r0, prefix in _PERIODIC:
        n = min(n_max, default_n) if n_max < default_n else default_n
        ok, w = fam.periodic_check(family, t0, base, sp, period, n, r0=r0)
        if not ok:
            return False, {"family": family, "t": t0, **w}
        seq = fam.scaled_sequence(family, t0, base, sp, len(prefix) - 1, r0=r0)
        if seq != prefix:
            return False, {"family": family, "t": t0, "lhs": str(seq), "rhs": str(prefix)}
    return True, None


# ---------------------------------------------------------------- section 2: Lucas / type B

@check("eq-2.1", "L_n(x) recursion equals the Lucas binomial sum for n > 0", n_max=14)
def _(n_max):
    def closed(n):
        c = [Fraction(0)] * (n + 1)
        for k in range(n // 2 + 1):
            c[n - 2 * k] = Fraction(n * binom(n - k, k) * (-1) ** k, n - k)
        return XPoly(c)

    return _compare(({"n": n}, fam.lucas(n), closed(n)) for n in range(1, n_max + 1))


@check("eq-2.2", "x^{2n} and x^{2n+1} in the Lucas basis with central binomial coefficients", n_max=10)
def _(n_max):
    return _all(
        _compare(({"n": n}, _xsum((binom(2 * n, n - k), fam.lucas(2 * k)) for k in range(n + 1)), X ** (2 * n))
                 for n in range(n_max + 1)),
        _compare(({"n": n}, _xsum((binom(2 * n + 1, n - k), fam.lucas(2 * k + 1)) for k in range(n + 1)),
                  X ** (2 * n + 1)) for n in range(n_max + 1)),
    )


@check("eq-2.3", "Lucas moments: central binomials at even powers, 0 at odd", n_max=20)
def _(n_max):
    mom = moments("M-classic", n_max)
    return _compare(
        ({"n": n}, mom[n], _rf(binom(n, n // 2) if n % 2 == 0 else 0)) for n in range(n_max + 1)
    )


@check("eq-2.4", "central binomial series from f0 = 1 + 2 z f0 f", order=16)
def _(order):
    f = solve_gf("CENTRAL_BINOM", order)
    return _compare(({"n": n}, f[n], IntPoly([binom(2 * n, n)])) for n in range(order + 1))


@check("eq-2.5", "R_n(x) from the Lucas split: binomial sum and R_n(x,1)", n_max=10)
def _(n_max):
    def closed(n):
        return XPoly([Fraction(2 * n * binom(n + k, 2 * k) * (-1) ** (n - k), n + k) for k in range(n + 1)])

    return _all(
        _compare(({"n": n}, fam.lucas_r(n), closed(n)) for n in range(1, n_max + 1)),
        _compare(({"n": n}, fam.lucas_r(n).specialize(1), fam.r_poly(n).specialize(1)) for n in range(n_max + 1)),
    )


@check("eq-2.6", "S_n(x) from the Lucas split: binomial sum and S_n(x,1)", n_max=10)
def _(n_max):
    def closed(n):
        return XPoly([Fraction((2 * n + 1) * binom(n + k + 1, 2 * k + 1) * (-1) ** (n - k), n + k + 1)
                      for k in range(n + 1)])

    return _all(
        _compare(({"n": n}, fam.lucas_s(n), closed(n)) for n in range(n_max + 1)),
        _compare(({"n": n}, fam.lucas_s(n).specialize(1), fam.s_poly(n).specialize(1)) for n in range(n_max + 1)),
    )


@check("eq-2.7", "moments of the R(x) functional are central binomials", n_max=12)
def _(n_max):
    mom = moments("M0-classic", n_max)
    return _compare(({"n": n}, mom[n], _rf(binom(2 * n, n))) for n in range(n_max + 1))


@check("eq-2.8", "moments of the S(x) functional are binom(2n+1,n) = M_{n+1}/2", n_max=12)
def _(n_max):
    mom = moments("M1-classic", n_max)
    return _compare(
        ({"n": n}, (mom[n], 2 * binom(2 * n + 1, n)), (_rf(binom(2 * n + 1, n)), binom(2 * n + 2, n + 1)))
        for n in range(n_max + 1)
    )


@check("eq-2.9", "type-B tau: closed form equals its two-step recursion", n_max=30)
def _(n_max):
    items = [({"n": n}, fam.tau_b(n), fam.tau_b_recursive(n)) for n in range(n_max + 1)]
    items.append(({"n": 1}, fam.tau_b(1), RatFunc(2 * T, 1 + T)))
    return _compare(items)


@check("eq-2.10", "L_n(x,t) at t=1 is L_n(x)", n_max=14)
def _(n_max):
    return _compare(({"n": n}, fam.lucas_t(n).specialize(1), fam.lucas(n).specialize(1)) for n in range(n_max + 1))


@check("eq-2.11", "R_n(x,t) recurrence equals L_{2n}(sqrt x, t)", n_max=10)
def _(n_max):
    return _compare(({"n": n}, fam.r_poly(n), _half_x(fam.lucas_t(2 * n), False)) for n in range(n_max + 1))


@check("eq-2.12", "splitting the L(x,t) recurrence gives the R recurrence coefficients", n_max=20)
def _(n_max):
    even, _odd = fam.split_even_odd(fam.LUCAS_T)
    return _compare(
        ({"k": k}, (even.s(k), even.t(k)), (fam.R_REC.s(k), fam.R_REC.t(k))) for k in range(n_max + 1)
    )


@check("eq-2.13", "T_0 = 2t and T_n = t", n_max=20)
def _(n_max):
    return _compare(({"n": n}, fam.big_t(n), _rf(2 * T if n == 0 else T)) for n in range(n_max + 1))


@check("eq-2.14", "R_n(x,t) = Q_n(x,t) - t Q_{n-2}(x,t)", n_max=12)
def _(n_max):
    return _compare(
        ({"n": n}, fam.r_poly(n), fam.q_poly(n) - fam.q_poly(n - 2) * _rf(T)) for n in range(2, n_max + 1)
    )


@check("eq-2.15", "explicit double sum for R_n(x,t), n > 0 (constant term (-1)^n (1+t^n))", n_max=12)
def _(n_max):
    return _compare(({"n": n}, fam.coef_closed_R(n), fam.r_poly(n)) for n in range(1, n_max + 1))


@check("eq-2.16", "sum_k D_{n,k}(t) R_k(x,t) = x^n with D from its recursion", n_max=10)
def _(n_max):
    d = triangle("D", n_max)
    return _compare(
        ({"n": n}, _xsum((d.entry(n, k), fam.r_poly(k)) for k in range(n + 1)), X ** n) for n in range(n_max + 1)
    )


@check("eq-2.17", "D_{n,k}(t) recursion equals expansion in the R basis", n_max=10)
def _(n_max):
    return _compare(({"n": n}, triangle("D", n_max).row(n), expand_monomial("D", n)) for n in range(n_max + 1))


@check("eq-2.18", "D_{n,k}(t) is a coefficient of (1+(1+t)x+tx^2)^n", n_max=12)
def _(n_max):
    tri = triangle("D", n_max)
    return _compare(
        ({"n": n, "k": k}, d_by_extraction(n, k), tri.entry(n, k).as_intpoly())
        for n in range(n_max + 1) for k in range(n + 1)
    )


@check("eq-2.19", "binomial sum for D_{n,k}(t); D_{n,k}(1) = binom(2n, n-k)", n_max=12)
def _(n_max):
    tri = triangle("D", n_max)
    return _all(
        _compare(({"n": n, "k": k}, d_closed(n, k), tri.entry(n, k).as_intpoly())
                 for n in range(n_max + 1) for k in range(n + 1)),
        _compare(({"n": n, "k": k}, d_closed(n, k)(1), binom(2 * n, n - k))
                 for n in range(n_max + 1) for k in range(n + 1)),
    )


@check("eq-2.20", "gamma vectors of D_{n,k}(t): closed form, expansion, nonnegativity", n_max=10)
def _(n_max):
    tri = triangle("D", n_max)
    return _compare(
        ({"n": n, "k": k}, gamma_expand(tri.entry(n, k).as_intpoly(), n - k), gamma_closed_D(n, k))
        for n in range(n_max + 1) for k in range(n + 1)
    )


@check("eq-2.21", "moments of the R(x,t) functional are M_n(t)", n_max=10)
def _(n_max):
    mom = moments("M0", n_max)
    return _compare(({"n": n}, mom[n], _rf(narayana_b(n))) for n in range(n_max + 1))


@check("eq-2.22", "sum_k D_{n,k}(t) L_{2k}(x,t) = x^{2n}", n_max=8)
def _(n_max):
    d = triangle("D", n_max)
    return _compare(
        ({"n": n}, _xsum((d.entry(n, k), fam.lucas_t(2 * k)) for k in range(n + 1)), X ** (2 * n))
        for n in range(n_max + 1)
    )


def _lucas_t_moments(n_max: int) -> Outcome:
    mom = moments("M", 2 * n_max + 1)
    return _compare(
        ({"power": j}, mom[j], _rf(narayana_b(j // 2)) if j % 2 == 0 else _rf(0)) for j in range(2 * n_max + 2)
    )


@check("eq-2.23", "moments of the L(x,t) functional: M_n(t) at even, 0 at odd powers", n_max=10)
def _(n_max):
    return _lucas_t_moments(n_max)


@check("thm-2", "L(x,t) moments are M_n(t) / 0, and D_{n,0}(t) = M_n(t)", n_max=10)
def _(n_max):
    d = triangle("D", n_max)
    return _all(
        _lucas_t_moments(n_max),
        _compare(({"n": n}, d.entry(n, 0), _rf(narayana_b(n))) for n in range(n_max + 1)),
    )


@check("delannoy-sums", "M_n(2) equals both Delannoy binomial sums", n_max=40)
def _(n_max):
    return _compare(
        ({"n": n}, (narayana_b(n)(2),) * 2,
         (sum(binom(2 * k, k) * binom(n + k, 2 * k) for k in range(n + 1)),
          sum(binom(n, k) * binom(n + k, k) for k in range(n + 1))))
        for n in range(n_max + 1)
    )


@check("eq-2.24", "type-B series M(t,z): coefficients M_n(t) and M^2 ((1-(1+t)z)^2 - 4tz^2) = 1", order=16)
def _(order):
    m = solve_gf("M_GF", order)
    disc = TSeries.of([ONE, -2 * (1 + T), (1 + T) ** 2 - 4 * T], order)
    prod = ts_mul(ts_mul(m, m), disc)
    return _all(
        _compare(({"n": n}, m[n], narayana_b(n)) for n in range(order + 1)),
        _compare(({"n": n}, prod[n], ONE if n == 0 else ZERO) for n in range(order + 1)),
    )


@check("eq-2.25", "column generating functions of D in terms of M(t,z) and C(t,z)", order=16, k_max=4)
def _(order, k_max):
    for k in range(k_max + 1):
        ok, w = column_gf_check("D", k, order)
        if not ok:
            return False, {"k": k, **w}
    return True, None


def _cor_2_26(ms: Iterable[int], n_max: int) -> Outcome:
    for m in ms:
        for n in range(m, n_max + 1):
            d = triangle("D", n)
            lhs = _xsum((d.entry(n, k).derivative(m), fam.r_poly(k)) for k in range(n + 1))
            q = 1
            for j in range(m):
                q *= n - j
            lhs = lhs * RatFunc(1, q)
            if any(not c.is_polynomial() for c in lhs.coeffs):
                return False, {"m": m, "n": n, "reason": "quotient is not a polynomial", "lhs": str(lhs)}
            rhs = _xsum((convolution_c(n - m - j, m), X ** j) for j in range(n - m + 1))
            if lhs != rhs:
                return False, {"m": m, "n": n, "lhs": str(lhs), "rhs": str(rhs)}
            # t = 1: sum_k binom(2n-m, n+k) L_{2k}(x) = sum_j c_j(m,1) x^{2(n-m-j)}
            lhs1 = _xsum((binom(2 * n - m, n + k), fam.lucas(2 * k)) for k in range(n - m + 1))
            rhs1 = _xsum((Fraction(m * binom(m + 2 * j, j), m + 2 * j), X ** (2 * (n - m - j)))
                         for j in range(n - m + 1))
            if lhs1 != rhs1 or any(convolution_c(j, m)(1) != Fraction(m * binom(m + 2 * j, j), m + 2 * j)
                                   for j in range(n - m + 1)):
                return False, {"m": m, "n": n, "t": 1, "lhs": str(lhs1), "rhs": str(rhs1)}
    return True, None


@check("cor-2.26", "derivatives of D_{n,k}(t) against R_k(x,t) give C(t,z)^m coefficients",
       m_max=3, n_max=10, m=None)
def _(m_max, n_max, m):
    return _cor_2_26([m] if m else range(1, m_max + 1), n_max)


def _direct(cid: str, params: dict, fn: Callable[[], tuple], conjecture: bool = False) -> Verdict:
    start = time.perf_counter()
    result = fn()
    ok, witness = result[0], result[1]
    evidence = result[2] if len(result) > 2 else None
    return Verdict(cid, "pass" if ok else "fail", params, witness,
                   (time.perf_counter() - start) * 1000, conjecture, evidence)


def corollary_2_26(m: int, n_max: int) -> Verdict:
    """Derivative identity pairing D_{n,k}(t) with R_k(x,t) for ``m <= n <= n_max``, plus its t=1 form.

    Raises DegenerateRange when no ``n`` in range satisfies ``n >= m``.
    """
    if m < 1 or n_max < m:
        raise DegenerateRange(f"need 1 <= m <= n_max, got m={m}, n_max={n_max}")
    return _direct("cor-2.26", {"m": m, "n_max": n_max}, lambda: _cor_2_26([m], n_max))


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


def _conj_sides(which: str, m: int, n: int) -> Tuple[XPoly, XPoly]:
    """Both sides of the conjectured identity without the integer product factor."""
    if which == "A":
        tri, basis = triangle("A", n), fam.p_poly
        rhs = _xsum(((j + 1) * convolution_c(n - m - j - 1, m), X ** (j + 1)) for j in range(n - m))
    else:
        tri, basis = triangle("B", n), fam.q_poly
        rhs = _xsum(((j + 1) * convolution_c(n - m - j, m), X ** j) for j in range(n - m + 1))
    lhs = _xsum((tri.entry(n, k).derivative(m), basis(k)) for k in range(n + 1))
    return lhs, rhs


# product readings: the literal one first, then plausible offsets
_CONJ_READINGS = {
    "A": {
        "prod_{j=1}^{m-1} (n-j)": lambda n, m: _prod(n - j for j in range(1, m)),
        "prod_{j=0}^{m-1} (n-j)": lambda n, m: _prod(n - j for j in range(0, m)),
    },
    "B": {
        "prod_{j=1}^{m-1} (n+1-j)": lambda n, m: _prod(n + 1 - j for j in range(1, m)),
        "prod_{j=0}^{m-1} (n+1-j)": lambda n, m: _prod(n + 1 - j for j in range(0, m)),
        "prod_{j=1}^{m-1} (n-j)": lambda n, m: _prod(n - j for j in range(1, m)),
    },
}


def _conj_1(ms: List[int], n_max: int):
    """Evaluate both conjectured derivative identities (A/P and B/Q) for each ``m`` in ``ms``.

    Returns ``(holds, witness, evidence)``.  The literal product reading decides
    the verdict; when it fails, the other readings are evaluated and the witness
    lists which of them hold over the whole range.
    """
    holds = {w: {r: True for r in _CONJ_READINGS[w]} for w in "AB"}
    first_failure = None
    for which in "AB":
        literal = next(iter(_CONJ_READINGS[which]))
        for m in ms:
            for n in range(m, n_max + 1):
                lhs, rhs = _conj_sides(which, m, n)
                for reading, factor in _CONJ_READINGS[which].items():
                    if not holds[which][reading]:
                        continue
                    if lhs != rhs * factor(n, m):
                        holds[which][reading] = False
                        if reading == literal and first_failure is None:
                            first_failure = {"identity": which, "m": m, "n": n, "reading": reading,
                                             "lhs": str(lhs), "rhs": str(rhs * factor(n, m))}
    ok = first_failure is None
    parts = []
    for which, name in (("A", "A/P identity"), ("B", "B/Q identity")):
        good = [r for r, v in holds[which].items() if v]
        parts.append(f"{name}: holds for m in {_mrange(ms)}, m<=n<={n_max} under "
                     + (", ".join(good) if good else "no tested reading"))
    evidence = "; ".join(parts)
    witness = None
    if not ok:
        witness = {**first_failure, "readings": {w: holds[w] for w in "AB"}}
    return ok, witness, evidence


def _mrange(ms: List[int]) -> str:
    return f"{min(ms)}..{max(ms)}" if len(ms) > 1 else str(ms[0])


def conjecture_1(m: int, n_max: int) -> Verdict:
    """Evidence report for the conjectured A/P and B/Q derivative identities at one ``m``."""
    if m < 1:
        raise DegenerateRange("m must be at least 1")
    return _direct(f"conj-1-m{m}", {"m": m, "n_max": n_max}, lambda: _conj_1([m], n_max), conjecture=True)


@check("conj-1", "conjectured derivative identities for A/P and B/Q (evidence only)", conjecture=True,
       m_max=3, n_max=10, m=None)
def _(m_max, n_max, m):
    return _conj_1([m] if m else list(range(1, m_max + 1)), n_max)


for _m in (1, 2, 3):
    check(f"conj-1-m{_m}", f"conjectured derivative identities at m={_m} (evidence only)", conjecture=True,
          n_max=10)(lambda n_max, _m=_m: _conj_1([_m], n_max))


@check("conj-1-t1", "t=1 special case of the B/Q derivative identity with F_{2k+1}(x)", n_max=10)
def _(n_max):
    items = []
    for n in range(1, n_max + 1):
        b = triangle("B", n)
        items.append(({"n": n, "derivative at 1": True},
                      [b.entry(n, k).derivative(1)(1) for k in range(n + 1)],
                      [(k + 1) * binom(2 * n + 1, n - k - 1) for k in range(n + 1)]))
        lhs = _xsum(((k + 1) * binom(2 * n + 1, n - k - 1), fam.fib(2 * k + 1)) for k in range(n + 1))
        rhs = _xsum(((j + 1) * _catalan(n - 1 - j), X ** (2 * j + 1)) for j in range(n))
        items.append(({"n": n}, lhs, rhs))
    return _compare(items)


@check("eq-2.29", "S_n(x,t) recurrence equals L_{2n+1}(sqrt x, t)/sqrt x and the split coefficients",
       n_max=10)
def _(n_max):
    _even, odd = fam.split_even_odd(fam.LUCAS_T)
    return _all(
        _compare(({"n": n}, fam.s_poly(n), _half_x(fam.lucas_t(2 * n + 1), True)) for n in range(n_max + 1)),
        _compare(({"k": k}, (odd.s(k), odd.t(k)), (fam.S_REC.s(k), fam.S_REC.t(k))) for k in range(n_max + 1)),
    )


@check("thm-3", "explicit G_{n,k}(t) numerators for S_n(x,t); palindromic of degree 2n-k for k>0", n_max=10)
def _(n_max):
    return _all(
        _compare(({"n": n}, fam.s_closed(n), fam.s_poly(n)) for n in range(n_max + 1)),
        _compare(
            ({"n": n, "k": k}, fam.g_coef(n, k).is_palindromic(), (True, 2 * n - k))
            for n in range(1, n_max + 1) for k in range(1, n + 1)
        ),
        _compare(
            ({"n": n}, all((c * (1 + T ** n)).is_polynomial() for c in fam.s_poly(n).coeffs), True)
            for n in range(n_max + 1)
        ),
    )


@check("thm-4", "E_{n,k}(t): explicit form, D-combination, recursion and S-basis expansion", n_max=10)
def _(n_max):
    tri = triangle("E", n_max)
    return _all(
        _compare(({"n": n, "k": k}, (e_closed(n, k), e_from_d(n, k)), (tri.entry(n, k),) * 2)
                 for n in range(n_max + 1) for k in range(n + 1)),
        _compare(({"n": n}, expand_monomial("E", n), tri.row(n)) for n in range(min(n_max, 8) + 1)),
    )


@check("eq-2.33-odd", "x^{2n+1} = sum_k E_{n,k}(t) L_{2k+1}(x,t)", n_max=8)
def _(n_max):
    return _compare(
        ({"n": n}, _xsum((e_closed(n, k), fam.lucas_t(2 * k + 1)) for k in range(n + 1)), X ** (2 * n + 1))
        for n in range(n_max + 1)
    )


@check("eq-2.35", "E_{n,0}(t) = M_{n+1}(t)/(1+t)", n_max=12)
def _(n_max):
    return _compare(({"n": n}, e_closed(n, 0), RatFunc(narayana_b(n + 1), 1 + T)) for n in range(n_max + 1))


@check("eq-2.36", "moments of the S(x,t) functional are M_{n+1}(t)/(1+t)", n_max=10)
def _(n_max):
    mom = moments("M1", n_max)
    return _compare(({"n": n}, mom[n], RatFunc(narayana_b(n + 1), 1 + T)) for n in range(n_max + 1))


def _has_digit_one(n: int) -> bool:
    while n:
        if n % 3 == 1:
            return True
        n //= 3
    return False


def _delannoy_div3(n_max: int) -> Outcome:
    """3 | M_n(2) exactly when n has a digit 1 in base 3."""
    if n_max < 1:
        raise DegenerateRange("n_max must be at least 1")
    qualifying = []
    for n in range(1, n_max + 1):
        div = sum(binom(n, k) ** 2 * 2 ** k for k in range(n + 1)) % 3 == 0
        if div != _has_digit_one(n):
            return False, {"n": n, "divisible": div, "base3_has_1": not div}
        if div:
            qualifying.append(n)
    head = [1, 3, 4, 5, 7, 9]
    if qualifying[: len(head)] != head[: len(qualifying)]:
        return False, {"lhs": str(qualifying[:6]), "rhs": str(head)}
    return True, None


@check("delannoy-div3", "3 divides M_n(2) iff the base-3 digits of n include a 1", n_max=200)
def _(n_max):
    return _delannoy_div3(n_max)


def delannoy_div3(n_max: int) -> Verdict:
    """3 | M_n(2) exactly when n has a digit 1 in base 3, for ``1 <= n <= n_max``."""
    return _direct("delannoy-div3", {"n_max": n_max}, lambda: _delannoy_div3(n_max))


# ---------------------------------------------------------------- section 3: convolutions

@check("eq-3.1", "C(t,z) satisfies t z C^2 = C - 1 - z C + t z C", order=16)
def _(order):
    c = solve_catalan_gf(order)
    lhs = ts_mul(c, c).mul_z().truncate(order) * T
    rhs = c - TSeries.of([ONE], order) - c.mul_z().truncate(order) + c.mul_z().truncate(order) * T
    return _compare(({"n": n}, lhs[n], rhs[n]) for n in range(order + 1))


@check("eq-3.2", "C(t,z)^m by series powering equals the m-fold Cauchy convolution of C_n(t)", order=16, m_max=5)
def _(order, m_max):
    c = solve_catalan_gf(order)
    seq = [narayana(n) for n in range(order + 1)]
    conv = [ONE] + [ZERO] * order
    items = []
    for m in range(1, m_max + 1):
        conv = [sum((conv[i] * seq[n - i] for i in range(n + 1)), ZERO) for n in range(order + 1)]
        items.extend(({"m": m, "n": n}, ts_pow(c, m)[n], conv[n]) for n in range(order + 1))
    return _compare(items)


@check("eq-3.3", "coefficients of C(t,z)^m equal the explicit sum c_n(m,t)", order=16, m_max=5)
def _(order, m_max):
    c = solve_catalan_gf(order)
    return _compare(
        ({"m": m, "n": n}, ts_pow(c, m)[n], convolution_c(n, m)) for m in range(1, m_max + 1) for n in range(order + 1)
    )


@check("eq-3.4", "m-th t-derivative of shifted D-column series equals C^m times the D column",
       order=16, m_max=3, k_max=4)
def _(order, m_max, k_max):
    for m in range(1, m_max + 1):
        for k in range(k_max + 1):
            ok, w = derivative_shift_check(k, m, order)
            if not ok:
                return False, {"m": m, "k": k, **w}
    return True, None


@check("eq-3.5", "c_n(m,1) = m/(2n+m) binom(2n+m, n)", n_max=16, m_max=5)
def _(n_max, m_max):
    return _compare(
        ({"m": m, "n": n}, convolution_c(n, m)(1), Fraction(m * binom(2 * n + m, n), 2 * n + m))
        for m in range(1, m_max + 1) for n in range(n_max + 1)
    )


@check("eq-3.6", "self-convolution of central binomials is 4^n", n_max=30)
def _(n_max):
    return _compare(
        ({"n": n}, sum(binom(2 * k, k) * binom(2 * n - 2 * k, n - k) for k in range(n + 1)), 4 ** n)
        for n in range(n_max + 1)
    )


@check("eq-3.7", "m-fold convolution of central binomials is 4^n binom(m/2+n-1, n)", n_max=16, m_max=6)
def _(n_max, m_max):
    return _compare(
        ({"m": m, "n": n}, central_binom_convolution(n, m), central_binom_convolution_brute(n, m))
        for m in range(1, m_max + 1) for n in range(n_max + 1)
    )


@check("eq-3.8", "M(t,z) satisfies M^2 ((1+(1-t)z)^2 - 4z) = 1", order=16)
def _(order):
    m = solve_gf("M_GF", order)
    disc = TSeries.of([ONE, 2 * (1 - T) - 4, (1 - T) ** 2], order)
    prod = ts_mul(ts_mul(m, m), disc)
    return _compare(({"n": n}, prod[n], ONE if n == 0 else ZERO) for n in range(order + 1))


@check("eq-3.9", "u_m(n,t) as coefficients of M(t,z)^m, and the two-step relation in m", order=16, m_max=5)
def _(order, m_max):
    m_series = solve_gf("M_GF", order)
    pows = {m: ts_pow(m_series, m) for m in range(0, m_max + 1)}
    items = [({"m": m, "n": n}, pows[m][n], convolution_u(n, m))
             for m in range(1, m_max + 1) for n in range(order + 1)]
    # M^{-2} = 1 - 2(1+t) z + (1-t)^2 z^2
    for m in range(2, m_max + 1):
        for n in range(order + 1):
            rhs = pows[m][n]
            if n >= 1:
                rhs = rhs - 2 * (1 + T) * pows[m][n - 1]
            if n >= 2:
                rhs = rhs + (1 - T) ** 2 * pows[m][n - 2]
            items.append(({"m": m, "n": n, "relation": True}, pows[m - 2][n], rhs))
    return _compare(items)


@check("thm-5", "explicit sum for u_m(n,t) equals the series coefficients", order=16, m_max=5)
def _(order, m_max):
    m_series = solve_gf("M_GF", order)
    return _compare(
        ({"m": m, "n": n}, convolution_u(n, m), ts_pow(m_series, m)[n])
        for m in range(1, m_max + 1) for n in range(order + 1)
    )


@check("eq-3.10", "u_m(n,t) table values for m <= 5, n <= 4", m_max=5)
def _(m_max):
    table = {
        1: ["1", "1+t", "1+4t+t^2", "1+9t+9t^2+t^3", "1+16t+36t^2+16t^3+t^4"],
        2: ["1", "2+2t", "3+10t+3t^2", "4+28t+28t^2+4t^3", "5+60t+126t^2+60t^3+5t^4"],
        3: ["1", "3+3t", "6+18t+6t^2", "10+60t+60t^2+10t^3", "15+150t+300t^2+150t^3+15t^4"],
        4: ["1", "4+4t", "10+28t+10t^2", "20+108t+108t^2+20t^3", "35+308t+594t^2+308t^3+35t^4"],
        5: ["1", "5+5t", "15+40t+15t^2", "35+175t+175t^2+35t^3", "70+560t+1050t^2+560t^3+70t^4"],
    }
    return _compare(
        ({"m": m, "n": n}, convolution_u(n, m).render(), table[m][n])
        for m in range(1, min(m_max, 5) + 1) for n in range(5)
    )


@check("eq-3.11", "gamma form of u_m(n,t): reconstruction, expansion, nonnegativity, hypergeometric sum",
       n_max=10, m_max=5)
def _(n_max, m_max):
    items = []
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            u = convolution_u(n, m)
            g = u_gamma(n, m)
            items.append(({"m": m, "n": n}, (g.reconstruct(), g.nonnegative), (u, True)))
            items.append(({"m": m, "n": n, "expand": True}, gamma_expand(u, n), g))
            for k in range(n + 1):
                lhs = sum(
                    (Fraction(binom(2 * j, j) * binom(n, 2 * j) * 2 ** j * _factorial(j) * binom(n - 2 * j, k - j),
                              binom(n, k) * _prod(m + 2 * i + 1 for i in range(j)))
                     for j in range(k + 1)),
                    Fraction(0),
                )
                rhs = Fraction(_prod(2 * n + m - 1 - 2 * j for j in range(k)),
                               _prod(2 * k + m - 1 - 2 * j for j in range(k)))
                items.append(({"m": m, "n": n, "k": k}, lhs, rhs))
    return _compare(items)


def _factorial(n: int) -> int:
    return _prod(range(1, n + 1))


@check("eq-3.13", "u_2(n,t): convolution, half binomial sum, product of sums, t^2 form", n_max=16)
def _(n_max):
    for n in range(n_max + 1):
        ok, w = u2_closed_check(n)
        if not ok:
            return False, w
    return True, None


@check("u3-closed", "u_3(n,t) = binom(n+2,2) C_{n+1}(t)", n_max=16)
def _(n_max):
    for n in range(n_max + 1):
        ok, w = u3_closed_check(n)
        if not ok:
            return False, w
    return True, None
