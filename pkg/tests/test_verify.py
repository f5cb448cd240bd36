"""Check registry, suite runner, report formats, and concordance plumbing."""

import json

import pytest

from spinlrl import verify, weyl
from spinlrl.verify import CheckResult, Report


# -- catalog -------------------------------------------------------------------


def test_catalog_ids_unique_and_ordered():
    checks = verify.list_checks()
    ids = [c.id for c in checks]
    assert len(ids) == len(set(ids))
    assert ids[0] == "GAMMA-CLIFF"
    # stable order: two calls agree
    assert ids == [c.id for c in verify.list_checks()]


def test_catalog_contains_expected_entries():
    by_id = {c.id: c for c in verify.list_checks()}
    assert "[A_i, M_j]" in by_id["SO-COM-AM"].ref
    assert "APP-B-7" in by_id
    assert by_id["NONCLOSE-GIGJ"].tier == "transcription"
    assert by_id["APP-C-14"].tier == "transcription"
    assert by_id["SO-COM-JJ"].tier == "core"


def test_suite_filters():
    core = verify.list_checks("core")
    assert len(core) >= 12
    assert all(c.suite == "core" for c in core)
    d3 = {c.id for c in verify.list_checks("d3")}
    assert {"JB-DOT", "JA-DOT"} <= d3
    with pytest.raises(ValueError):
        verify.list_checks("bogus")


def test_dims_gating():
    metric = verify.get_check("SO21-METRIC")
    assert metric.applicable(3) and not metric.applicable(5)
    d3 = verify.get_check("JA-DOT")
    assert d3.applicable(3) and not d3.applicable(2)


# -- run_check ------------------------------------------------------------------


def test_run_check_examples():
    result = verify.run_check("CASIMIR-Q2", 3)
    assert result.passed and result.residual.is_zero()
    assert verify.run_check("LRL-CONSERVED", 2).passed
    assert verify.run_check("SO-COM-AA", 4).passed


def test_run_check_unknown_id():
    with pytest.raises(KeyError):
        verify.run_check("NOT-A-CHECK", 3)


def test_run_check_inapplicable_dimension():
    with pytest.raises(ValueError):
        verify.run_check("JA-DOT", 2)


# -- run_suite ------------------------------------------------------------------


def test_core_suite_d2_all_pass():
    report = verify.run_suite("core", 2)
    assert len(report.results) >= 12
    assert report.failed == 0
    assert report.passed == len(report.results)


def test_d3_suite_includes_dot_products():
    report = verify.run_suite("d3", 3)
    ids = {r.id for r in report.results}
    assert {"JB-DOT", "JA-DOT", "JB-DOT-SIGMA"} <= ids
    assert report.failed == 0


def test_report_sorted_and_consistent():
    report = verify.run_suite("sturm", 2)
    ids = [r.id for r in report.results]
    assert ids == sorted(ids)
    assert report.passed + report.failed == len(report.results)


# -- reports ---------------------------------------------------------------------


def test_json_schema_fields():
    report = verify.run_suite("d3", 3)
    payload = json.loads(verify.report_to_json([report], no_timing=True))
    assert set(payload.keys()) == {"suite", "version", "d", "checks", "summary"}
    assert payload["suite"] == "d3" and payload["d"] == 3
    for entry in payload["checks"]:
        assert set(entry.keys()) == {"id", "paperRef", "pass", "residualTermCount", "residualText", "elapsedMs"}
        assert entry["elapsedMs"] == 0.0
    assert payload["summary"] == {"passed": report.passed, "failed": report.failed}


def test_report_determinism_modulo_timing():
    first = verify.report_to_json([verify.run_suite("d3", 3)], no_timing=True)
    second = verify.report_to_json([verify.run_suite("d3", 3)], no_timing=True)
    assert first == second


def test_markdown_mirrors_json():
    report = verify.run_suite("d3", 3)
    md = verify.report_to_markdown([report], no_timing=True)
    payload = json.loads(verify.report_to_json([report], no_timing=True))
    for entry in payload["checks"]:
        assert entry["id"] in md
    assert f"d={payload['d']}" in md


def test_text_report_states_summary():
    report = verify.run_suite("d3", 3)
    text = verify.report_to_text([report], no_timing=True)
    assert f"{report.passed} passed, {report.failed} failed" in text


# -- failure handling ---------------------------------------------------------------


def _fake_result(check_id, passed):
    return CheckResult(check_id, 3, passed, weyl.zero(3) if passed else weyl.x(3, 1), None if passed else "x", 0.0)


def test_blocking_failure_respects_tier():
    # a transcription-tier failure blocks only in strict mode
    soft = Report(suite="all", d=3, results=(_fake_result("APP-A-SS", False),))
    assert not verify.has_blocking_failure(soft)
    assert verify.has_blocking_failure(soft, strict=True)
    hard = Report(suite="all", d=3, results=(_fake_result("SO-COM-JJ", False),))
    assert verify.has_blocking_failure(hard)


# -- full registry invariant -------------------------------------------------------------


@pytest.mark.parametrize("d", (2, 3, 4, 5, 6))
def test_full_registry_zero_residual(d):
    # every check, every applicable dimension in the default range
    report = verify.run_suite("all", d)
    assert report.failed == 0, [(r.id, r.failed_label) for r in report.results if not r.passed]


# -- oracle concordance ----------------------------------------------------------------


def test_crosscheck_check_agrees():
    entries = verify.crosscheck_check("GX-SQUARE", 3, trials=6)
    assert entries and all(e.agreed for e in entries)


def test_crosscheck_detects_wrong_identity():
    # sanity: a deliberately wrong pair must disagree
    from spinlrl.verify import OpSum, of_expr

    wrong = OpSum(2, [(2, (weyl.x(2, 1),))])
    right = of_expr(weyl.x(2, 1))
    from spinlrl import oracle

    f = oracle.random_function(2, 0)
    assert wrong.apply(f) != right.apply(f)


def test_opsum_to_expr_matches_manual_product():
    from spinlrl.verify import comm

    a, b = weyl.x(2, 1), weyl.p(2, 1)
    assert comm(a, b).to_expr() == weyl.commutator(a, b)
