#!/usr/bin/env python3
"""
Integration Tests for the corr-cli command line

Tests argument parsing, exit codes and report output including:
- Compact and JSON move syntax
- Exit code 0 on success, 1 on a failed check, 2 on bad input
- Reports on stdout or in a file, timings only on request

Version: 1.0.0
"""

import json

import pytest

from corrcli.cli import EXIT_FAILED, EXIT_INPUT, EXIT_OK, main, parse_move
from corrcli.core.errors import CorrError
from corrcli.surfaces import Move, load_marking
from corrcli.utils.helpers import read_json


# ============================================================================
# Test Move Syntax
# ============================================================================

class TestParseMove:
    """Moves given on the command line."""

    @pytest.mark.unit
    @pytest.mark.parametrize("text,expected", [
        ("Z:v0", Move.z(0)),
        ("B^-1:v1", Move.b(1, inverse=True)),
        ("S:c1", Move.s(1)),
        ("T^-1:c2", Move.t(2, inverse=True)),
        ("F:c3", Move.f(3)),
        ("F^-1:v0@2-", Move.f_split(0, 2, -1)),
        ("C:k0", Move.c(0)),
        ('{"kind": "A", "cut": 1}', Move.a(1)),
    ])
    def test_forms(self, text, expected):
        assert parse_move(text) == expected

    @pytest.mark.unit
    @pytest.mark.parametrize("text", ["Q:v0", "Z", "Z:x1", "S:c"])
    def test_rejected(self, text):
        with pytest.raises(CorrError):
            parse_move(text)


# ============================================================================
# Test Commands
# ============================================================================

class TestCommands:
    """End-to-end runs of main()."""

    @pytest.mark.integration
    def test_check_category(self, data_dir, capsys):
        assert main(["check-category", str(data_dir / "toric.json")]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["command"] == "check-category"
        assert report["success"]
        assert [r["name"] for r in report["results"]] == ["axioms", "modularity", "coend identities"]

    @pytest.mark.integration
    def test_dump_coend(self, data_dir, capsys):
        assert main(["dump-coend", str(data_dir / "toric.json")]) == EXIT_OK
        coend = json.loads(capsys.readouterr().out)["coend"]
        assert coend["zeta"] == "1"
        assert coend["T"] == [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "-1"]]

    @pytest.mark.integration
    def test_non_modular_algebra_fails(self, data_dir, capsys):
        code = main(["frobenius", "modular", "--algebra", str(data_dir / "algebras" / "toric_unit.json")])
        assert code == EXIT_FAILED
        assert "not modular" in capsys.readouterr().err

    @pytest.mark.integration
    def test_missing_file(self, temp_dir, capsys):
        assert main(["check-category", str(temp_dir / "missing.json")]) == EXIT_INPUT
        assert "File not found" in capsys.readouterr().err

    @pytest.mark.integration
    def test_no_command(self, capsys):
        assert main([]) == EXIT_INPUT

    @pytest.mark.integration
    def test_group_without_subcommand(self, capsys):
        assert main(["blocks"]) == EXIT_INPUT

    @pytest.mark.integration
    def test_report_file(self, data_dir, temp_dir, capsys):
        path = temp_dir / "report.json"
        code = main(["frobenius", "check", "--algebra", str(data_dir / "algebras" / "vect_unit.json"),
                     "--report", str(path)])
        assert code == EXIT_OK
        report = read_json(path)
        assert report["success"]
        assert "timings" not in report
        assert "all checks hold" in capsys.readouterr().out

    @pytest.mark.integration
    def test_correlator_check_with_timings(self, data_dir, temp_dir, single_thread):
        path = temp_dir / "report.json"
        code = main(["correlator", "check", "--algebra", str(data_dir / "algebras" / "vect_unit.json"),
                     "--max-genus", "1", "--max-holes", "2", "--timings", "--report", str(path)])
        assert code == EXIT_OK
        report = read_json(path)
        assert report["timings"]
        assert report["conventions"]["z_direction"] == "clockwise"

    @pytest.mark.integration
    @pytest.mark.slow
    def test_consecutive_runs_write_identical_reports(self, data_dir, temp_dir, monkeypatch):
        monkeypatch.setenv("CORR_THREADS", "4")
        first, second = temp_dir / "first.json", temp_dir / "second.json"
        for path in (first, second):
            code = main(["correlator", "check", "--algebra", str(data_dir / "algebras" / "toric_1e.json"),
                         "--max-genus", "1", "--max-holes", "2", "--report", str(path)])
            assert code == EXIT_OK
        assert first.read_bytes() == second.read_bytes()

    @pytest.mark.integration
    def test_blocks_dim(self, data_dir, capsys):
        code = main(["blocks", "dim", "--category", str(data_dir / "toric.json"), "--summands", "1,e",
                     "--outgoing", "3"])
        assert code == EXIT_OK
        assert json.loads(capsys.readouterr().out)["results"][0]["dim"] == 4

    @pytest.mark.integration
    def test_blocks_need_an_object(self, data_dir, capsys):
        assert main(["blocks", "dim", "--category", str(data_dir / "toric.json")]) == EXIT_INPUT

    @pytest.mark.slow
    def test_two_holed_torus_relation_holds(self, data_dir, capsys):
        code = main(["blocks", "check-relations", "--category", str(data_dir / "toric.json"),
                     "--summands", "1", "--include-w13"])
        assert code == EXIT_OK
        result = json.loads(capsys.readouterr().out)["results"][0]
        assert "two_holed_torus" in [r["name"] for r in result["results"]]

    @pytest.mark.integration
    def test_unnormalized_integral_breaks_handle_braiding(self, data_dir, capsys):
        code = main(["blocks", "check-relations", "--category", str(data_dir / "toric.json"),
                     "--summands", "1", "--relation", "handle_braiding", "--unnormalized"])
        assert code == EXIT_FAILED
        assert not json.loads(capsys.readouterr().out)["results"][0]["normalized"]

    @pytest.mark.integration
    def test_unknown_relation(self, data_dir, capsys):
        code = main(["blocks", "check-relations", "--category", str(data_dir / "toric.json"),
                     "--summands", "1", "--relation", "octagon"])
        assert code == EXIT_INPUT


# ============================================================================
# Test Marking Commands
# ============================================================================

class TestMarkingCommands:
    """Marking files through the command line."""

    @pytest.mark.integration
    def test_apply_writes_marking(self, data_dir, temp_dir, capsys):
        out = temp_dir / "rotated.json"
        code = main(["marking", "apply", str(data_dir / "markings" / "pants.json"), "--move", "Z:v0",
                     "--output", str(out)])
        assert code == EXIT_OK
        assert load_marking(out).words() == [(("b", "2"), ("b", "3"), ("b", "1"))]

    @pytest.mark.integration
    def test_sew(self, data_dir, capsys):
        code = main(["marking", "sew", str(data_dir / "markings" / "two_pants.json"),
                     "--incoming-circle", "a", "--outgoing-circle", "b"])
        assert code == EXIT_OK
        result = json.loads(capsys.readouterr().out)["results"][0]
        assert result["cut"] == 1
        assert len(result["marking"]["surface"]["components"]) == 1

    @pytest.mark.integration
    def test_sew_wrong_orientation(self, data_dir, capsys):
        code = main(["marking", "sew", str(data_dir / "markings" / "two_pants.json"),
                     "--incoming-circle", "b", "--outgoing-circle", "a"])
        assert code == EXIT_INPUT
        assert "OrientationMismatch" in capsys.readouterr().err
