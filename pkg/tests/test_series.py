from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from narayana.arith import ONE, T, ZERO, IntPoly, binom
from narayana.render import parse_intpoly
from narayana.series import (
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
from narayana.triangles import narayana, narayana_b

from goldens import U_TABLE

small = st.lists(st.integers(-5, 5), min_size=1, max_size=3).map(IntPoly)


def series(order):
    return st.lists(small, min_size=order + 1, max_size=order + 1).map(lambda c: TSeries.of(c, order))


@given(series(6), series(6), series(6))
@settings(max_examples=40)
def test_series_ring(a, b, c):
    assert ts_mul(a, b) == ts_mul(b, a)
    assert ts_mul(ts_mul(a, b), c) == ts_mul(a, ts_mul(b, c))
    assert ts_mul(a, b + c) == ts_mul(a, b) + ts_mul(a, c)


@given(series(5))
def test_z_shift(a):
    assert a.mul_z().div_z().truncate(4) == a.truncate(4)


def test_order_is_enforced():
    s = solve_catalan_gf(4)
    assert s[4] == narayana(4)
    with pytest.raises(IndexError):
        s[5]


def test_known_series():
    assert [solve_catalan_gf(10)[n] for n in range(11)] == [narayana(n) for n in range(11)]
    assert [solve_gf("B_GF", 10)[n] for n in range(11)] == [narayana(n + 1) for n in range(11)]
    assert [solve_gf("M_GF", 10)[n] for n in range(11)] == [narayana_b(n) for n in range(11)]
    assert [solve_gf("CENTRAL_BINOM", 10)[n] for n in range(11)] == [IntPoly([binom(2 * n, n)]) for n in range(11)]
    z2 = solve_gf("CATALAN_Z2", 8)
    assert [z2[n] for n in range(9)] == [IntPoly([c]) if c else ZERO for c in (1, 0, 1, 0, 2, 0, 5, 0, 14)]


def test_catalan_functional_equation():
    c = solve_catalan_gf(12)
    lhs = ts_mul(c, c).mul_z().truncate(12) * T
    rhs = c - TSeries.of([ONE], 12) - c.mul_z().truncate(12) + c.mul_z().truncate(12) * T
    assert lhs == rhs


@pytest.mark.parametrize("tag", ["A", "B", "D"])
def test_column_gfs(tag):
    for k in range(5):
        ok, w = column_gf_check(tag, k, 12)
        assert ok, w


def test_derivative_shift():
    for m in range(1, 4):
        for k in range(4):
            ok, w = derivative_shift_check(k, m, 12)
            assert ok, w


@pytest.mark.parametrize("m", range(1, 6))
def test_u_table(m):
    assert [convolution_u(n, m) for n in range(5)] == [parse_intpoly(s) for s in U_TABLE[m]]


@given(st.integers(0, 10), st.integers(1, 5))
@settings(deadline=None)
def test_convolution_closed_forms_match_powers(n, m):
    c = solve_catalan_gf(10)
    mm = solve_gf("M_GF", 10)
    assert ts_pow(c, m)[n] == convolution_c(n, m)
    assert ts_pow(mm, m)[n] == convolution_u(n, m)
    g = u_gamma(n, m)
    assert g.nonnegative and g.reconstruct() == convolution_u(n, m)


def test_spot_values():
    assert convolution_c(2, 2) == 3 + 2 * T
    assert convolution_u(1, 4) == 4 + 4 * T
    assert central_binom_convolution(3, 2) == 64
    assert central_binom_convolution(2, 3) == 30


@given(st.integers(0, 10), st.integers(1, 6))
def test_central_binomial_convolution(n, m):
    assert central_binom_convolution(n, m) == central_binom_convolution_brute(n, m)


@pytest.mark.parametrize("n", range(13))
def test_u2_u3(n):
    assert u2_closed_check(n)[0]
    assert u3_closed_check(n)[0]


def test_fib_t_generating_function():
    assert fib_t_gf_check(12)[0]
