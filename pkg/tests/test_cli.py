from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from narayana.cli import (
    FIXTURE_SPECS,
    FetchDisabled,
    NotIntegerSequence,
    derive_sequence,
    load_fixture,
    main,
    oeis_check,
)
from narayana.render import parse_rational, parse_ratfunc, parse_xpoly
from narayana.families import FAMILIES


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["family", "lucas-t", "--n", "2"], "x^2 - (1+t)\n"),
        (["family", "fib", "--n", "0"], "1\n"),
        (["family", "s", "--n", "1", "--t", "1"], "x - 3\n"),
        (["triangle", "ballot", "--n", "0"], "1\n"),
    ],
)
def test_examples(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_triangle_last_rows(capsys):
    _, out, _ = run(capsys, "triangle", "B", "--n", "4", "--t", "1")
    assert out.splitlines()[-1] == "42 48 27 8 1"
    _, out, _ = run(capsys, "triangle", "D", "--n", "4", "--t", "2")
    assert out.splitlines()[-1] == "321 180 62 12 1"


def test_unknown_names(capsys):
    code, _, err = run(capsys, "family", "nope", "--n", "2")
    assert code != 0 and "UnknownFamily" in err
    code, _, err = run(capsys, "triangle", "Z", "--n", "2")
    assert code != 0 and "UnknownTriangle" in err
    code, _, err = run(capsys, "family", "fib", "--n", "-1")
    assert code != 0 and "BadRange" in err


def test_verify_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "eq-1.30")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "conj-1", "--m", "2", "--n-max", "10")
    assert code == 0 and "evidence:" in out
    code, _, err = run(capsys, "verify", "nope")
    assert code != 0 and "nope" in err
    report = tmp_path / "r.jsonl"
    code, _, _ = run(capsys, "verify", "eq-2.35", "thm-1", "--out", str(report))
    recs = [json.loads(line) for line in report.read_text().splitlines()]
    assert [r["id"] for r in recs] == ["eq-2.35", "thm-1"]
    assert all(set(r) >= {"id", "status", "ranges", "witness", "elapsed_ms"} for r in recs)


def test_verify_all_matches_registry(capsys):
    from narayana.verify import list_checks

    code, out, _ = run(capsys, "verify", "all", "--format", "json-like", "--n-max", "4", "--order", "6")
    ids = [json.loads(line)["id"] for line in out.splitlines()]
    assert ids == [c.id for c in list_checks()]
    assert code == 0


def test_verify_exit_ignores_conjectures(capsys, monkeypatch):
    import narayana.verify as vf

    monkeypatch.setitem(vf._CONJ_READINGS, "A", {"bogus": lambda n, m: 7})
    code, out, _ = run(capsys, "verify", "conj-1", "--m-max", "2", "--n-max", "5")
    assert "FAIL" in out and code == 0


def test_bfile(capsys, tmp_path):
    _, out, _ = run(capsys, "bfile", "narayana@t=2", "--n", "5")
    assert out == "0 1\n1 1\n2 3\n3 11\n4 45\n5 197\n"
    _, out, _ = run(capsys, "bfile", "M@t=1", "--n", "4")
    assert [int(line.split()[1]) for line in out.splitlines()] == [1, 2, 6, 20, 70]
    code, _, err = run(capsys, "bfile", "E-col0@t=2", "--n", "3")
    assert code != 0 and "13/3" in err
    with pytest.raises(NotIntegerSequence):
        from narayana.cli import _integers

        _integers(derive_sequence("E-col0@t=2", 3)[0], "E")
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    run(capsys, "bfile", "D-rows@t=2", "--n", "6", "--out", str(a))
    run(capsys, "bfile", "D-rows@t=2", "--n", "6", "--out", str(b))
    data = a.read_bytes()
    assert data == b.read_bytes() and data.endswith(b"\n") and b" \n" not in data and b"\r" not in data


@pytest.mark.parametrize("aid", sorted(FIXTURE_SPECS))
def test_fixtures(aid):
    offset, terms = load_fixture(aid)
    checked, _ = oeis_check(aid)
    assert checked == len(terms) > 0


def test_oeis_check_cli(capsys):
    code, out, _ = run(capsys, "oeis-check", "A081606")
    assert code == 0 and out.startswith("PASS")
    code, _, err = run(capsys, "oeis-check", "A039598", "--spec", "B-rows@t=2")
    assert code == 1 and "mismatch" in err
    code, _, err = run(capsys, "oeis-check", "A000045")
    assert code != 0 and "FixtureMissing" in err


def test_fetch_requires_base_url(monkeypatch):
    monkeypatch.delenv("OEIS_BASE_URL", raising=False)
    with pytest.raises(FetchDisabled):
        oeis_check("A001003", fetch=True)


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_family_json_roundtrip(capsys, name):
    _, out, _ = run(capsys, "family", name, "--n", "5", "--all", "--format", "json-like")
    for line in out.splitlines():
        rec = json.loads(line)
        assert parse_xpoly(rec["polynomial"]) == FAMILIES[name](rec["n"])


@given(st.sampled_from(["A", "B", "D", "E"]), st.integers(0, 6),
       st.one_of(st.none(), st.fractions(min_value=-3, max_value=3, max_denominator=4)))
@settings(max_examples=30, deadline=None)
def test_triangle_json_roundtrip(tag, n, t0):
    import io
    from contextlib import redirect_stdout

    from narayana.triangles import triangle

    argv = ["triangle", tag, "--n", str(n), "--format", "json-like"]
    if t0 is not None:
        if any(e.den(t0) == 0 for r in triangle(tag, n).rows for e in r):
            return
        argv.append(f"--t={t0.numerator}/{t0.denominator}")
    buf = io.StringIO()
    with redirect_stdout(buf):
        assert main(argv) == 0
    rows = json.loads(buf.getvalue())["rows"]
    tri = triangle(tag, n)
    for i, r in enumerate(rows):
        for k, text in enumerate(r):
            want = tri.entry(i, k)
            assert (parse_ratfunc(text) == want) if t0 is None else (parse_rational(text) == want(t0))


def test_moments_and_gamma(capsys):
    _, out, _ = run(capsys, "moments", "L1", "--n", "3", "--t", "2", "--format", "bfile")
    assert out == "0 1\n1 3\n2 11\n3 45\n"
    _, out, _ = run(capsys, "gamma", "D", "--n", "4")
    assert out.splitlines()[0] == "k=0: [1, 12, 6]"
    _, out, _ = run(capsys, "gamma", "poly", "--poly", "1+4t+t^2")
    assert "[1, 2]" in out
