#!/usr/bin/env python3
"""
Unit Tests for corrcli.core.config and corrcli.core.errors

Version: 1.0.0
"""

import pytest

from corrcli.core.config import DEFAULT_MAX_GENUS, DEFAULT_MAX_HOLES, RunConfig, get_thread_count
from corrcli.core.errors import CorrError, DataFormatError, NotInvertible


# ============================================================================
# Test Thread Count
# ============================================================================

class TestThreadCount:
    """CORR_THREADS controls the worker pool size."""

    @pytest.mark.unit
    def test_default_is_one(self, monkeypatch):
        monkeypatch.delenv("CORR_THREADS", raising=False)
        assert get_thread_count() == 1

    @pytest.mark.unit
    def test_reads_environment(self, monkeypatch):
        monkeypatch.setenv("CORR_THREADS", "6")
        assert get_thread_count() == 6

    @pytest.mark.unit
    @pytest.mark.parametrize("raw", ["0", "-3", "many"])
    def test_invalid_values_fall_back(self, monkeypatch, raw):
        monkeypatch.setenv("CORR_THREADS", raw)
        assert get_thread_count() == 1


# ============================================================================
# Test Run Configuration
# ============================================================================

class TestRunConfig:
    """Validation of one CLI invocation's options."""

    @pytest.mark.unit
    def test_defaults(self):
        config = RunConfig("check-category")
        assert config.max_genus == DEFAULT_MAX_GENUS == 1
        assert config.max_holes == DEFAULT_MAX_HOLES == 4
        config.validate()

    @pytest.mark.unit
    def test_missing_path(self, temp_dir):
        with pytest.raises(ValueError):
            RunConfig("dump-coend", paths=[temp_dir / "missing.json"]).validate()

    @pytest.mark.unit
    def test_existing_path(self, data_dir):
        RunConfig("dump-coend", paths=[data_dir / "toric.json"]).validate()

    @pytest.mark.unit
    def test_negative_scope(self):
        with pytest.raises(ValueError):
            RunConfig("correlator check", max_genus=-1).validate()

    @pytest.mark.unit
    def test_unknown_sign_convention(self):
        with pytest.raises(ValueError):
            RunConfig("dump-coend", sign_convention="largest").validate()


# ============================================================================
# Test Errors
# ============================================================================

class TestErrors:
    """Error taxonomy."""

    @pytest.mark.unit
    def test_message_and_details(self):
        e = NotInvertible("singular", {"sector": "e"})
        assert isinstance(e, CorrError)
        assert e.message == "singular"
        assert e.details == {"sector": "e"}

    @pytest.mark.unit
    def test_details_default_empty(self):
        assert DataFormatError("bad").details == {}
