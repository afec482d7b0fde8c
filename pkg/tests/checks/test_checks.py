#!/usr/bin/env python3
"""
Unit Tests for corrcli.checks

Tests the check executor and report assembly including:
- Input order under a worker pool
- CorrError turned into a failed result
- Deterministic reports with opt-in timings

Version: 1.0.0
"""

import pytest

from corrcli.checks import assemble_report, first_failure, run_checks
from corrcli.core.errors import NotInvertible
from corrcli.utils.helpers import _create_result


def _ok(name):
    return lambda: _create_result(True, name=name)


def _raises():
    raise NotInvertible("singular block", {"sector": "1"})


# ============================================================================
# Test Executor
# ============================================================================

class TestRunChecks:
    """Named checks run on a bounded pool."""

    @pytest.mark.unit
    @pytest.mark.parametrize("threads", [1, 4])
    def test_keeps_input_order(self, threads):
        checks = [(f"check {i}", _ok(f"check {i}")) for i in range(8)]
        results = run_checks(checks, threads)
        assert [r["name"] for r in results] == [f"check {i}" for i in range(8)]
        assert all(r["success"] for r in results)

    @pytest.mark.unit
    def test_corr_error_becomes_failure(self):
        results = run_checks([("fine", _ok("fine")), ("broken", _raises)], threads=2)
        assert results[0]["success"]
        assert not results[1]["success"]
        assert results[1]["name"] == "broken"
        assert results[1]["error"].startswith("NotInvertible")
        assert results[1]["details"] == {"sector": "1"}

    @pytest.mark.unit
    def test_results_carry_seconds(self, single_thread):
        result = run_checks([("fine", _ok("fine"))])[0]
        assert result["seconds"] >= 0

    @pytest.mark.unit
    def test_other_exceptions_propagate(self):
        def bad():
            raise RuntimeError("boom")

        with pytest.raises(RuntimeError):
            run_checks([("bad", bad)], threads=1)

    @pytest.mark.unit
    def test_first_failure(self):
        results = [{"success": True}, {"success": False, "name": "b"}, {"success": False, "name": "c"}]
        assert first_failure(results)["name"] == "b"
        assert first_failure(results[:1]) is None


# ============================================================================
# Test Reports
# ============================================================================

class TestAssembleReport:
    """One JSON-ready report per CLI command."""

    @pytest.mark.unit
    def test_report_fields(self):
        report = assemble_report("check-category", [_create_result(True, name="axioms")])
        assert report["command"] == "check-category"
        assert report["success"]
        assert report["failed"] == []
        assert report["versions"]["corr-cli"] == "1.0.0"
        assert report["conventions"] == {"lambda_sign": "positive-leading", "z_direction": "clockwise"}

    @pytest.mark.unit
    def test_timings_are_stripped_by_default(self):
        results = [_create_result(True, name="a", seconds=0.5, checks=[{"success": True, "seconds": 0.1}])]
        report = assemble_report("x", results)
        assert "timings" not in report
        assert "seconds" not in report["results"][0]
        assert "seconds" not in report["results"][0]["checks"][0]

    @pytest.mark.unit
    def test_timings_on_request(self):
        results = [_create_result(True, name="a", seconds=0.5, checks=[{"success": True, "seconds": 0.1}])]
        report = assemble_report("x", results, include_timings=True)
        assert report["timings"] == {"a": 0.5, "a/checks[0]": 0.1}

    @pytest.mark.unit
    def test_failed_names(self):
        results = [_create_result(True, name="a"), _create_result(False, error="no", name="b")]
        report = assemble_report("x", results, sign_convention="negative-leading")
        assert not report["success"]
        assert report["failed"] == ["b"]
        assert report["conventions"]["lambda_sign"] == "negative-leading"
