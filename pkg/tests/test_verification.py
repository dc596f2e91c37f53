import json

import pytest

from decabracket.verification import report as report_module
from decabracket.verification.report import (
    STATUS_FAIL,
    STATUS_FLAGGED,
    STATUS_INFO,
    STATUS_PASS,
    CheckOutcome,
    CheckResult,
    VerifyReport,
)
from decabracket.verification.suites import (
    SUITE_NAMES,
    SUITES,
    check_cech_products,
    check_json_roundtrip,
    check_linearity,
    check_negative_control,
    check_rank,
    check_permutation_pattern,
    check_torus_weights,
    run_check,
    run_suite,
    selected_checks,
)

CHEAP_TABLE_CHECKS = [
    ("permutation_pattern", check_permutation_pattern),
    ("linearity", check_linearity),
    ("json_roundtrip", check_json_roundtrip),
]


def result(status, name="check"):
    return CheckResult("tables", name, status, 1, 0.01)


def test_report_exit_codes():
    assert VerifyReport("all", 1, [result(STATUS_PASS), result(STATUS_INFO)]).exit_code == 0
    assert VerifyReport("all", 1, [result(STATUS_PASS), result(STATUS_FAIL)]).exit_code == 1
    assert VerifyReport("all", 1, [result(STATUS_FLAGGED)]).exit_code == 1
    assert VerifyReport("all", 1, []).ok


def test_report_counts_and_json():
    report = VerifyReport("tables", 2, [result(STATUS_PASS, "a"), result(STATUS_FAIL, "b")], total_time=1.5)
    assert report.counts == {STATUS_PASS: 1, STATUS_FAIL: 1, STATUS_FLAGGED: 0, STATUS_INFO: 0}
    data = json.loads(report.to_json())
    assert data["ok"] is False
    assert [r["name"] for r in data["results"]] == ["a", "b"]
    assert "2 checks: 1 passed, 1 failed" in report.render_text()


def test_unknown_status_is_rejected():
    with pytest.raises(ValueError):
        CheckOutcome("maybe", 1)
    assert report_module.STATUSES == (STATUS_PASS, STATUS_FAIL, STATUS_FLAGGED, STATUS_INFO)


def test_registry():
    assert SUITE_NAMES == ("all", "cech", "ainf", "tables", "poisson")
    assert len(selected_checks("all")) == sum(len(checks) for checks in SUITES.values())
    assert selected_checks("ainf") == [("ainf", "tree_vs_closed")]
    with pytest.raises(ValueError):
        selected_checks("everything")


@pytest.mark.parametrize("check", [check_permutation_pattern, check_linearity, check_json_roundtrip, check_rank, check_torus_weights])
def test_cheap_checks_pass(check):
    assert check().status == STATUS_PASS


def test_product_laws_on_a_short_sample():
    outcome = check_cech_products(samples=200)
    assert outcome.status == STATUS_PASS
    assert outcome.cases == 200


def test_run_check_turns_exceptions_into_failures(monkeypatch):
    def explode():
        raise RuntimeError("boom")

    monkeypatch.setitem(SUITES, "tables", [("explode", explode)])
    outcome = run_check("tables", "explode")
    assert outcome.status == STATUS_FAIL
    assert "RuntimeError: boom" in outcome.witness


def test_run_suite_keeps_registry_order(monkeypatch):
    monkeypatch.setitem(SUITES, "tables", CHEAP_TABLE_CHECKS)
    inline = run_suite("tables", jobs=1)
    pooled = run_suite("tables", jobs=2)
    names = [name for name, _ in CHEAP_TABLE_CHECKS]
    assert [r.name for r in inline.results] == names
    assert [r.name for r in pooled.results] == names
    assert inline.ok and pooled.ok


def test_run_suite_rejects_bad_jobs():
    with pytest.raises(ValueError):
        run_suite("tables", jobs=0)


def test_negative_control_finds_a_harmless_ambient_witness():
    outcome = check_negative_control()
    assert outcome.status == STATUS_PASS
    assert "ambient witness" in outcome.detail


def test_negative_control_is_flagged_without_a_witness(monkeypatch):
    monkeypatch.setattr("decabracket.verification.suites.ambient_jacobi_witness", lambda bivectors: None)
    outcome = check_negative_control()
    assert outcome.status == STATUS_FLAGGED
    assert outcome.cases == 55
    monkeypatch.setitem(SUITES, "poisson", [("negative_control", check_negative_control)])
    report = run_suite("poisson", jobs=1)
    assert report.counts[STATUS_FLAGGED] == 1
    assert report.exit_code == 1
