from __future__ import annotations

import pytest
from hypothesis import assume, given, settings, strategies as st

from narayana.arith import T, IntPoly
from narayana.paths import (
    AscentMissing,
    BudgetExceeded,
    NonGammaNonnegative,
    NotPalindromic,
    bijection_check,
    count_ballot_words,
    count_nsew_endpoint,
    enumerate_weight,
    gamma_closed_B,
    gamma_closed_C,
    gamma_closed_D,
    gamma_expand,
    height,
    is_nonnegative,
    iter_paths,
    nsew_endpoint_closed,
    path_weight,
    phi_inverse,
    phi_involution,
)
from narayana.series import u_gamma, convolution_u
from narayana.triangles import ballot_closed, narayana, triangle

nsew = st.text(alphabet="NSEW", min_size=0, max_size=9)


def test_small_weights():
    assert path_weight("B", "NES") == T
    assert path_weight("B", "W") == T
    assert path_weight("A", "W").is_zero()
    assert path_weight("A", "NW") == T
    assert path_weight("B", "S").is_zero()
    assert path_weight("LUCAS1", "NS") == IntPoly([2])
    assert path_weight("D", "NS") == 2 * T


@pytest.mark.parametrize("tag", ["B", "A", "D"])
def test_weights_equal_triangle(tag):
    tri = triangle(tag, 7)
    for n in range(8):
        for k in range(n + 1):
            assert enumerate_weight(tag, n, k) == tri.entry(n, k).as_intpoly()


def test_lucas_paths():
    tri = triangle("LUCAS1", 10)
    for n in range(11):
        for k in range(n + 1):
            assert enumerate_weight("LUCAS1", n, k)(1) == tri.entry(n, k)(1)


def test_ballot_words():
    for n in range(12):
        for k in range(n + 1):
            assert count_ballot_words(n, k) == ballot_closed(n, k)


def test_endpoint_counts():
    for n in range(6):
        for k in range(n + 1):
            for x in range(-n, n + 1):
                assert count_nsew_endpoint(n, x, k) == nsew_endpoint_closed(n, x, k)


def test_budget():
    with pytest.raises(BudgetExceeded):
        list(iter_paths("B", 30))


@given(nsew)
def test_iterated_paths_are_nonnegative(p):
    assert is_nonnegative(p) == all(height(p[:j]) >= 0 for j in range(len(p) + 1))


def test_phi_examples():
    assert phi_involution("NE", 1) == "SE"
    assert phi_involution("NN", 2) == "SS"
    assert phi_involution("NN", 1) == "SN"
    with pytest.raises(AscentMissing):
        phi_involution("E", 1)


@given(nsew, st.integers(0, 5))
@settings(max_examples=300)
def test_phi_roundtrip(p, i):
    assume(is_nonnegative(p) and i <= height(p))
    q = phi_involution(p, i)
    assert len(q) == len(p)
    assert height(q) == height(p) - 2 * i
    assert phi_inverse(q) == (p, i)


@pytest.mark.parametrize("n", range(7))
def test_bijection(n):
    ok, witness = bijection_check(n)
    assert ok, witness


def test_gamma_basics():
    g = gamma_expand(IntPoly([1, 4, 1]))
    assert g.gamma == (1, 2) and g.reconstruct() == IntPoly([1, 4, 1])
    with pytest.raises(NotPalindromic):
        gamma_expand(IntPoly([1, 2]))
    with pytest.raises(NonGammaNonnegative):
        gamma_expand(IntPoly([1, 1, 1]))
    assert gamma_expand(IntPoly([1, 1, 1]), strict=False).gamma == (1, -1)


@given(st.lists(st.integers(0, 9), min_size=1, max_size=4), st.integers(0, 3))
def test_gamma_roundtrip(gam, extra):
    from narayana.paths import GammaVector

    d = 2 * (len(gam) - 1) + extra
    g = GammaVector(tuple(gam), d)
    p = g.reconstruct()
    assume(not p.is_zero())
    assert gamma_expand(p, d, strict=False).reconstruct() == p


def test_gamma_closed_forms():
    b, d = triangle("B", 10), triangle("D", 10)
    for n in range(11):
        assert gamma_expand(narayana(n + 1), n) == gamma_closed_C(n)
        for k in range(n + 1):
            assert gamma_expand(b.entry(n, k).as_intpoly(), n - k) == gamma_closed_B(n, k)
            assert gamma_expand(d.entry(n, k).as_intpoly(), n - k) == gamma_closed_D(n, k)
            assert gamma_closed_B(n, k).nonnegative and gamma_closed_D(n, k).nonnegative
    for m in range(1, 6):
        for n in range(11):
            assert gamma_expand(convolution_u(n, m), n) == u_gamma(n, m)
