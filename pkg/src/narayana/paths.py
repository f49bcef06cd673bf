"""Weighted NSEW lattice paths, ballot words, gamma vectors and the phi involution.

Paths are plain strings over ``"NSEW"``; height counts ``N`` as +1 and ``S`` as -1.
Everything here is exhaustive enumeration, meant as an oracle for the
triangles rather than a way to compute them.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .arith import T, ZERO, IntPoly, binom

__all__ = [
    "BudgetExceeded",
    "NotPalindromic",
    "NonGammaNonnegative",
    "AscentMissing",
    "WeightScheme",
    "SCHEMES",
    "DEFAULT_BUDGET",
    "height",
    "is_nonnegative",
    "path_weight",
    "iter_paths",
    "enumerate_weight",
    "count_ballot_words",
    "count_nsew_endpoint",
    "nsew_endpoint_closed",
    "GammaVector",
    "gamma_expand",
    "gamma_reconstruct",
    "gamma_closed_B",
    "gamma_closed_D",
    "gamma_closed_C",
    "phi_involution",
    "phi_inverse",
    "bijection_check",
]

DEFAULT_BUDGET = 12
BALLOT_BUDGET = 26


class BudgetExceeded(RuntimeError):
    pass


class NotPalindromic(ValueError):
    pass


class NonGammaNonnegative(ArithmeticError):
    def __init__(self, gamma: "GammaVector"):
        super().__init__(f"negative gamma coefficient in {gamma.gamma}")
        self.gamma = gamma


class AscentMissing(ValueError):
    pass


STEP = {"N": 1, "S": -1, "E": 0, "W": 0}

# A step weight is (integer factor, power of t), or None if the step is forbidden.
StepWeight = Optional[Tuple[int, int]]


@dataclass(frozen=True)
class WeightScheme:
    tag: str
    steps: str
    weight: Callable[[str, int], StepWeight]  # (step, height before the step)


def _w_b(step: str, h: int) -> StepWeight:
    return (1, 0) if step in "NE" else (1, 1)


def _w_a(step: str, h: int) -> StepWeight:
    if step == "W" and h == 0:
        return None
    return _w_b(step, h)


def _w_d(step: str, h: int) -> StepWeight:
    if step == "S":
        return (2, 1) if h == 1 else (1, 1)
    return _w_b(step, h)


def _w_lucas(step: str, h: int) -> StepWeight:
    return (2, 0) if step == "S" and h == 1 else (1, 0)


SCHEMES: Dict[str, WeightScheme] = {
    "B": WeightScheme("B", "NSEW", _w_b),
    "A": WeightScheme("A", "NSEW", _w_a),
    "D": WeightScheme("D", "NSEW", _w_d),
    # the Lucas recursion has no level term, so only N and S steps occur
    "LUCAS1": WeightScheme("LUCAS1", "NS", _w_lucas),
}


def _scheme(scheme) -> WeightScheme:
    return scheme if isinstance(scheme, WeightScheme) else SCHEMES[scheme.upper()]


def height(path: str) -> int:
    return sum(STEP[c] for c in path)


def is_nonnegative(path: str) -> bool:
    h = 0
    for c in path:
        h += STEP[c]
        if h < 0:
            return False
    return True


def path_weight(scheme, path: str) -> IntPoly:
    """Weight of a single path, ``0`` if it is not admissible."""
    sch = _scheme(scheme)
    coef, exp, h = 1, 0, 0
    for c in path:
        if c not in sch.steps:
            return ZERO
        w = sch.weight(c, h)
        h += STEP[c]
        if w is None or h < 0:
            return ZERO
        coef *= w[0]
        exp += w[1]
    return IntPoly.monomial(coef, exp)


def _check_budget(n: int, budget: int) -> None:
    if n < 0:
        raise ValueError("length must be non-negative")
    if n > budget:
        raise BudgetExceeded(f"length {n} exceeds exhaustive budget {budget}")


def iter_paths(scheme, n: int, k: Optional[int] = None, budget: int = DEFAULT_BUDGET) -> Iterator[str]:
    """All admissible non-negative paths of length ``n`` (ending at height ``k`` if given)."""
    _check_budget(n, budget)
    sch = _scheme(scheme)

    def rec(prefix: str, h: int) -> Iterator[str]:
        left = n - len(prefix)
        if left == 0:
            if k is None or h == k:
                yield prefix
            return
        for c in sch.steps:
            h2 = h + STEP[c]
            if h2 < 0 or sch.weight(c, h) is None:
                continue
            if k is not None and abs(h2 - k) > left - 1:
                continue
            yield from rec(prefix + c, h2)

    yield from rec("", 0)


def enumerate_weight(scheme, n: int, k: int, budget: int = DEFAULT_BUDGET) -> IntPoly:
    """Total weight of admissible non-negative paths of length ``n`` ending at height ``k``."""
    _check_budget(n, budget)
    if k < 0:
        return ZERO
    sch = _scheme(scheme)
    acc: Dict[int, int] = defaultdict(int)

    def rec(left: int, h: int, coef: int, exp: int) -> None:
        if left == 0:
            if h == k:
                acc[exp] += coef
            return
        for c in sch.steps:
            h2 = h + STEP[c]
            if h2 < 0 or abs(h2 - k) > left - 1:
                continue
            w = sch.weight(c, h)
            if w is None:
                continue
            rec(left - 1, h2, coef * w[0], exp + w[1])

    rec(n, 0, 1, 0)
    if not acc:
        return ZERO
    out = [0] * (max(acc) + 1)
    for e, c in acc.items():
        out[e] = c
    return IntPoly(out)


def count_ballot_words(n: int, k: int, budget: int = BALLOT_BUDGET) -> int:
    """Number of ``±1`` words of length ``n`` with non-negative partial sums and total ``k``."""
    _check_budget(n, budget)

    def rec(left: int, h: int) -> int:
        if left == 0:
            return int(h == k)
        total = 0
        for d in (1, -1):
            h2 = h + d
            if h2 >= 0 and abs(h2 - k) <= left - 1:
                total += rec(left - 1, h2)
        return total

    return rec(n, 0) if k >= 0 else 0


def count_nsew_endpoint(n: int, x_end: int, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Unweighted non-negative NSEW paths of length ``n`` from the origin to ``(x_end, k)``."""
    _check_budget(n, budget)
    dx = {"N": 0, "S": 0, "E": 1, "W": -1}

    def rec(left: int, x: int, h: int) -> int:
        if left == 0:
            return int(x == x_end and h == k)
        if abs(x - x_end) + abs(h - k) > left:
            return 0
        total = 0
        for c in "NSEW":
            h2 = h + STEP[c]
            if h2 >= 0:
                total += rec(left - 1, x + dx[c], h2)
        return total

    return rec(n, 0, 0) if k >= 0 else 0


def nsew_endpoint_closed(n: int, x_end: int, k: int) -> int:
    """Closed form for :func:`count_nsew_endpoint`, with ``x_end = -n + k + 2j``."""
    if k < 0 or (x_end + n - k) % 2:
        return 0
    j = (x_end + n - k) // 2
    return binom(n, j) * binom(n, k + j) - binom(n, j - 1) * binom(n, k + j + 1)


# ---------------------------------------------------------------- gamma vectors

@dataclass(frozen=True)
class GammaVector:
    """``sum_i gamma[i] t^i (1+t)^(degree - 2i)``."""

    gamma: Tuple[int, ...]
    degree: int

    @property
    def nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gamma)

    def reconstruct(self) -> IntPoly:
        return gamma_reconstruct(self)


def gamma_reconstruct(g: GammaVector) -> IntPoly:
    out = ZERO
    for i, c in enumerate(g.gamma):
        if c:
            out = out + IntPoly.monomial(c, i) * (1 + T) ** (g.degree - 2 * i)
    return out


def gamma_expand(p: IntPoly, degree: Optional[int] = None, strict: bool = True) -> GammaVector:
    """Gamma vector of ``p`` relative to the palindromic degree bound ``degree``.

    With ``strict`` a negative entry raises :class:`NonGammaNonnegative`;
    otherwise the vector is returned as is.
    """
    d = p.degree if degree is None else degree
    if p.is_zero():
        return GammaVector((), max(d, 0))
    if d < p.degree:
        raise NotPalindromic(f"degree bound {d} below degree {p.degree}")
    c = list(p.coeffs) + [0] * (d + 1 - len(p.coeffs))
    if c != c[::-1]:
        raise NotPalindromic(f"{p.render()} is not palindromic about {d}/2")
    residual = p
    gamma = []
    for i in range(d // 2 + 1):
        g = residual[i] if i <= residual.degree else 0
        gamma.append(g)
        if g:
            residual = residual - IntPoly.monomial(g, i) * (1 + T) ** (d - 2 * i)
    assert residual.is_zero()
    while gamma and gamma[-1] == 0:
        gamma.pop()
    out = GammaVector(tuple(gamma), d)
    if strict and not out.nonnegative:
        raise NonGammaNonnegative(out)
    return out


def _trim(gamma: List[int], d: int) -> GammaVector:
    while gamma and gamma[-1] == 0:
        gamma.pop()
    return GammaVector(tuple(gamma), d)


def _check(n: int, k: int) -> None:
    if n < 0 or not 0 <= k <= n:
        from .families import IndexOutOfTriangle

        raise IndexOutOfTriangle(f"(n, k) = ({n}, {k}) is outside 0 <= k <= n")


def gamma_closed_B(n: int, k: int) -> GammaVector:
    _check(n, k)
    gamma = []
    for i in range((n - k) // 2 + 1):
        num = binom(k + 2 * i, i) * (k + 1) * binom(n, 2 * i + k)
        assert num % (i + k + 1) == 0
        gamma.append(num // (i + k + 1))
    return _trim(gamma, n - k)


def gamma_closed_D(n: int, k: int) -> GammaVector:
    _check(n, k)
    return _trim([binom(2 * j + k, j) * binom(n, 2 * j + k) for j in range((n - k) // 2 + 1)], n - k)


def gamma_closed_C(n: int) -> GammaVector:
    """Gamma vector of ``C_{n+1}(t)``: ``C_i binom(n, 2i)``."""
    from .triangles import ballot_closed

    return _trim([ballot_closed(2 * i, 0) * binom(n, 2 * i) for i in range(n // 2 + 1)], n)


# ---------------------------------------------------------------- phi involution

def _heights(path: str) -> List[int]:
    hs = [0]
    for c in path:
        hs.append(hs[-1] + STEP[c])
    return hs


def phi_involution(p: str, i: int) -> str:
    """Turn the last ascents of ``p`` to heights ``1..i`` into ``S`` steps."""
    if i == 0:
        return p
    hs = _heights(p)
    if not is_nonnegative(p) or not 0 <= i <= hs[-1]:
        raise AscentMissing(f"phi_{i} needs a non-negative path ending at height >= {i}")
    steps = list(p)
    for level in range(1, i + 1):
        pos = next((j for j in range(len(p) - 1, -1, -1) if p[j] == "N" and hs[j] == level - 1), None)
        if pos is None:
            raise AscentMissing(f"{p} has no ascent to height {level}")
        steps[pos] = "S"
    return "".join(steps)


def phi_inverse(q: str) -> Tuple[str, int]:
    """Undo :func:`phi_involution`: flip the premier descents below the axis back to ``N``."""
    steps = list(q)
    h, floor, count = 0, 0, 0
    for j, c in enumerate(q):
        if c == "S" and h == floor:
            # first descent of q from height ``floor`` to ``floor - 1``
            steps[j] = "N"
            floor -= 1
            count += 1
        h += STEP[c]
    return "".join(steps), count


def bijection_check(n: int, budget: int = 9) -> Tuple[bool, Optional[dict]]:
    """Check that ``phi_i`` maps ``{(p, i)}`` bijectively onto all length-``n`` paths.

    Also checks the weight shift ``w(phi_i(p)) = t^i w(p)`` and that the
    total weight is ``(2 + 2t)^n``.
    """
    _check_budget(n, budget)
    seen: Dict[str, Tuple[str, int]] = {}
    total = ZERO
    for p in iter_paths("B", n, budget=budget):
        k = height(p)
        wp = path_weight("B", p)
        for i in range(k + 1):
            q = phi_involution(p, i)
            if q in seen:
                return False, {"image": q, "from": [seen[q], (p, i)]}
            seen[q] = (p, i)
            wq = IntPoly.monomial(1, sum(1 for c in q if c in "SW"))
            if wq != wp * IntPoly.monomial(1, i):
                return False, {"path": p, "i": i, "image": q, "weight": wq.render()}
            if phi_inverse(q) != (p, i):
                return False, {"path": p, "i": i, "image": q, "inverse": phi_inverse(q)}
            total = total + wq
    if len(seen) != 4 ** n:
        missing = next("".join(s) for s in product("NSEW", repeat=n) if "".join(s) not in seen)
        return False, {"missing": missing, "covered": len(seen)}
    expected = (2 + 2 * T) ** n
    if total != expected:
        return False, {"total": total.render(), "expected": expected.render()}
    return True, None
