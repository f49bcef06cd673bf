from __future__ import annotations

import pytest

import narayana.verify as vf
from narayana.verify import (
    DegenerateRange,
    UnknownIdentity,
    conjecture_1,
    corollary_2_26,
    delannoy_div3,
    list_checks,
    run_check,
)

REQUIRED = (
    ["eq-1.3", "eq-1.4", "eq-1.5", "eq-1.8", "eq-1.11", "eq-1.12", "eq-1.13", "eq-1.14", "thm-1", "eq-1.17",
     "eq-1.19", "eq-1.21"]
    + [f"eq-1.{i}" for i in range(23, 31)]
    + ["eq-1.31", "eq-1.32"] + [f"eq-1.{i}" for i in range(34, 40)]
    + ["eq-1.41", "eq-1.42", "periodicity-remarks", "eq-2.2", "eq-2.3"]
    + [f"eq-2.{i}" for i in range(5, 9)] + [f"eq-2.{i}" for i in range(9, 26)]
    + ["thm-2", "cor-2.26", "conj-1", "thm-3", "thm-4", "eq-2.35", "eq-2.36", "delannoy-div3"]
    + [f"eq-3.{i}" for i in range(1, 12)] + ["eq-3.13", "u3-closed"]
)

IDS = [c.id for c in list_checks()]


def test_registry_complete():
    missing = [i for i in REQUIRED if i not in IDS]
    assert not missing
    assert "eq-3.12" not in IDS
    assert len(IDS) == len(set(IDS))
    assert any(i.startswith("conj-1-m") for i in IDS)


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        run_check("unknown-id")


@pytest.mark.parametrize("cid", IDS)
def test_every_check_passes_at_defaults(cid):
    v = run_check(cid)
    assert v.status == "pass", v.witness
    assert v.ranges and v.elapsed_ms >= 0


def test_overrides_apply_only_to_known_parameters():
    v = run_check("eq-1.30", {"n_max": 4, "order": 3})
    assert v.ranges == {"n_max": 4}
    assert v.passed


def test_deterministic():
    a, b = run_check("thm-1").record(), run_check("thm-1").record()
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_failing_check_carries_replayable_witness(monkeypatch):
    monkeypatch.setitem(vf._REGISTRY, "broken", vf.IdentityCheck(
        "broken", "off by one", {"n_max": 5},
        lambda n_max: vf._compare(({"n": n}, n * n, n * n + (n == 3)) for n in range(n_max + 1))))
    v = run_check("broken")
    assert v.status == "fail"
    assert v.witness == {"n": 3, "lhs": "9", "rhs": "10"}
    # replay with the witness parameters
    assert run_check("broken", {"n_max": v.witness["n"]}).status == "fail"
    assert run_check("broken", {"n_max": 2}).status == "pass"


def test_budget_exceeded_status():
    v = run_check("paths-B", {"n_max": 40})
    assert v.status == "budget-exceeded"
    assert v.witness


def test_corollary():
    assert corollary_2_26(1, 3).passed
    assert corollary_2_26(2, 4).passed
    assert corollary_2_26(3, 10).passed
    with pytest.raises(DegenerateRange):
        corollary_2_26(3, 2)


def test_conjecture_reports_evidence():
    v = conjecture_1(2, 8)
    assert v.conjecture
    assert v.status in ("pass", "fail")
    assert v.evidence and "n<=8" in v.evidence


def test_conjecture_harness_can_refute(monkeypatch):
    # swap in a wrong literal product: the harness must fail with witness polynomials
    wrong = {"prod_{j=0}^{m} (n-j)": lambda n, m: vf._prod(n - j for j in range(0, m + 1))}
    readings = {"A": {**wrong, **vf._CONJ_READINGS["A"]}, "B": vf._CONJ_READINGS["B"]}
    monkeypatch.setattr(vf, "_CONJ_READINGS", readings)
    v = conjecture_1(2, 6)
    assert v.status == "fail"
    assert v.witness["identity"] == "A"
    assert "lhs" in v.witness and "rhs" in v.witness
    assert v.witness["readings"]["A"]["prod_{j=1}^{m-1} (n-j)"] is True


def test_conjecture_does_not_presume_equality():
    lhs, rhs = vf._conj_sides("B", 1, 3)
    assert not lhs.is_zero() and not rhs.is_zero()


def test_delannoy():
    assert delannoy_div3(200).passed
    assert delannoy_div3(1).passed


def test_verdict_record_shape():
    r = run_check("eq-2.35").record()
    assert set(r) >= {"id", "status", "ranges", "witness", "elapsed_ms"}
