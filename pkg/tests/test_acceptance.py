"""Acceptance criteria AC1-AC11, each at its pinned range and time limit.

A one-line PASS/FAIL summary per criterion is printed by the conftest hook.
"""
from __future__ import annotations

import time
from contextlib import contextmanager

import pytest

import narayana.families as fam
from narayana.arith import T, RatFunc
from narayana.cli import load_fixture, oeis_check
from narayana.paths import (
    bijection_check,
    enumerate_weight,
    gamma_closed_B,
    gamma_closed_C,
    gamma_closed_D,
    gamma_expand,
)
from narayana.render import parse_intpoly, parse_xpoly
from narayana.series import convolution_u, u_gamma
from narayana.triangles import closed_triangle, expand_monomial, moments, narayana, narayana_b, triangle
from narayana.verify import conjecture_1, corollary_2_26, delannoy_div3, run_check

import goldens as G


@contextmanager
def within(seconds: float):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


def _rows(tag, n, fn=str):
    tri = triangle(tag, n)
    return [[fn(e) for e in tri.row(i)] for i in range(n + 1)]


# ---- AC1: golden tables, < 1 s each

def _q_table():
    return [[str(fam.coef_closed_q(n, k)) for k in range(n + 1)] for n in range(6)]


def _p_table():
    return [[str(fam.coef_closed_p(n, k)) for k in range(n + 1)] for n in range(6)]


def _columns_to_rows(cols):
    return [[cols[k][n - k] for k in range(n + 1)] for n in range(len(cols[0]))]


GOLDEN_CASES = {
    "F_n(x)": lambda: [fam.fib(n) for n in range(6)] == [parse_xpoly(s) for s in G.FIB],
    "F_n(x,t)": lambda: [fam.fib_t(n) for n in range(6)] == [parse_xpoly(s) for s in G.FIB_T],
    "q_{n,k}": lambda: _q_table() == [[str(parse_intpoly(e)) for e in r] for r in G.Q_TABLE],
    "p_{n,k}": lambda: _p_table() == [[str(parse_intpoly(e)) for e in r] for r in G.P_TABLE],
    "B": lambda: _rows("B", 4) == _columns_to_rows(G.B_COLUMNS),
    "D": lambda: _rows("D", 4) == G.D_TABLE,
    "G": lambda: [[str(fam.g_coef(n, k)) for k in range(n + 1)] for n in range(4)] == G.G_TABLE,
    "u_m(n)": lambda: all([str(convolution_u(n, m)) for n in range(5)] == G.U_TABLE[m] for m in range(1, 6)),
}


@pytest.mark.parametrize("name", list(GOLDEN_CASES))
def test_ac1_golden_tables(name):
    with within(1.0):
        assert GOLDEN_CASES[name]()


# ---- AC2: integer specializations, < 5 s total

def test_ac2_integer_specializations():
    with within(5.0):
        assert triangle("B", 4).specialize(1) == G.B_AT_1
        assert triangle("B", 4).specialize(2) == G.B_AT_2
        assert triangle("A", 4).specialize(1) == G.A_AT_1
        assert triangle("A", 4).specialize(2) == G.A_AT_2
        assert triangle("D", 4).specialize(1) == G.D_AT_1
        assert triangle("D", 4).specialize(2) == G.D_AT_2
        assert triangle("LUCAS1", 6).specialize(1) == G.LUCAS_TRIANGLE
        assert [narayana(n)(2) for n in range(6)] == G.SCHROEDER
        assert [narayana_b(n)(2) for n in range(6)] == G.DELANNOY
        assert triangle("E", 7).specialize(2) == G.E_AT_2
        for aid in ("A039598", "A110440", "A039599", "A172094", "A094527", "A118384", "A108044", "A001003"):
            checked, terms = oeis_check(aid)
            assert checked == len(terms)


# ---- AC3: three-way agreement, n <= 12, < 60 s

@pytest.mark.parametrize("tag", ["B", "A", "D", "E"])
def test_ac3_three_way_agreement(tag):
    with within(60.0):
        rec = triangle(tag, 12)
        assert closed_triangle(tag, 12).rows == rec.rows
        for n in range(13):
            assert expand_monomial(tag, n) == rec.row(n)


# ---- AC4: path oracle, n <= 8, < 120 s

@pytest.mark.parametrize("tag", ["B", "A", "D", "LUCAS1"])
def test_ac4_path_oracle(tag):
    with within(120.0):
        tri = triangle(tag, 8)
        for n in range(9):
            for k in range(n + 1):
                w = enumerate_weight(tag, n, k)
                if tag == "LUCAS1":
                    assert w(1) == tri.entry(n, k)(1)
                else:
                    assert w == tri.entry(n, k).as_intpoly()


# ---- AC5: moments, n <= 10

def test_ac5_moments():
    lm, mm = moments("L", 21), moments("M", 21)
    for n in range(11):
        assert lm[2 * n] == RatFunc.of(narayana(n))
        assert mm[2 * n] == RatFunc.of(narayana_b(n))
        assert lm[2 * n + 1].is_zero() and mm[2 * n + 1].is_zero()
    assert moments("L1", 10) == [RatFunc.of(narayana(n + 1)) for n in range(11)]
    assert moments("M1", 10) == [RatFunc(narayana_b(n + 1), 1 + T) for n in range(11)]


# ---- AC6: gamma-nonnegativity, n <= 10, m <= 5

def test_ac6_gamma_nonnegativity():
    b, d = triangle("B", 10), triangle("D", 10)
    for n in range(11):
        g = gamma_expand(narayana(n + 1), n)
        assert g == gamma_closed_C(n) and g.nonnegative
        for k in range(n + 1):
            gb = gamma_expand(b.entry(n, k).as_intpoly(), n - k)
            gd = gamma_expand(d.entry(n, k).as_intpoly(), n - k)
            assert gb == gamma_closed_B(n, k) and gb.nonnegative
            assert gd == gamma_closed_D(n, k) and gd.nonnegative
        for m in range(1, 6):
            gu = gamma_expand(convolution_u(n, m), n)
            assert gu == u_gamma(n, m) and gu.nonnegative
            assert all(isinstance(v, int) for v in gu.gamma)


# ---- AC7: bijection, n <= 7

def test_ac7_bijection():
    for n in range(8):
        ok, witness = bijection_check(n)
        assert ok, witness
    assert run_check("eq-1.30").passed


# ---- AC8: series suite through order 16, < 60 s

SERIES_IDS = ["eq-1.8", "eq-1.17", "eq-1.29", "eq-1.41", "eq-1.42", "eq-2.4", "eq-2.24", "eq-2.25"] + [
    f"eq-3.{i}" for i in range(1, 12)] + ["eq-3.13", "u3-closed"]


def test_ac8_series_suite():
    with within(60.0):
        for cid in SERIES_IDS:
            v = run_check(cid, {"order": 16})
            assert v.passed, (cid, v.witness)
            assert v.ranges.get("order", 16) == 16


# ---- AC9: corollary and conjecture, m <= 3, n <= 10

def test_ac9_corollary_and_conjecture():
    for m in range(1, 4):
        v = corollary_2_26(m, 10)
        assert v.passed, v.witness
    for m in range(1, 4):
        v = conjecture_1(m, 10)
        # definite verdict either way: evidence range on pass, witness polynomials on failure
        assert v.status in ("pass", "fail")
        assert v.evidence
        if v.status == "fail":
            assert "lhs" in v.witness and "rhs" in v.witness
        print(f"conjecture m={m}: {v.status}; {v.evidence}")


# ---- AC10: periodicity

def test_ac10_periodicity():
    assert fam.periodic_check("F", 1, 1, 1, 6, 60)[0]
    assert fam.periodic_check("F", 2, 4, 8, 16, 96)[0]
    assert fam.periodic_check("F", 3, 27, 12, 24, 96)[0]
    assert fam.periodic_check("R", 1, 1, 1, 3, 60, r0=2)[0]
    assert fam.periodic_check("R", 2, 16, 8, 8, 96, r0=2)[0]
    assert fam.periodic_check("R", 3, 729, 12, 12, 96, r0=2)[0]
    assert fam.scaled_sequence("F", 3, 27, 12, len(G.F_1_3_PREFIX) - 1) == G.F_1_3_PREFIX
    assert fam.scaled_sequence("R", 3, 729, 12, 11, r0=2) == G.R_1_3_PREFIX
    assert fam.scaled_sequence("R", 2, 16, 8, 7, r0=2) == G.R_1_2_PREFIX


# ---- AC11: Delannoy divisibility

def test_ac11_delannoy_divisibility():
    assert delannoy_div3(200).passed
    offset, terms = load_fixture("A081606")
    assert terms == G.DELANNOY_DIV3_PREFIX and offset == 1
    assert oeis_check("A081606")[0] == len(terms)
