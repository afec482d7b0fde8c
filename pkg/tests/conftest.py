#!/usr/bin/env python3
"""
Pytest Configuration and Shared Fixtures for corrcli Tests

Provides bundled categories, algebras, coends and markings.
Version: 1.0.0
"""

import sys
import tempfile
import pytest
from pathlib import Path
from typing import Generator

# Add corrcli to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from corrcli.category import load_category
from corrcli.coend import build_coend_K
from corrcli.frobenius import load_algebra

DATA_DIR = Path(__file__).parent.parent / "data"


# ============================================================================
# Directory Fixtures
# ============================================================================

@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """Provides a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


# ============================================================================
# Categories and Coends
# ============================================================================
# Session-scoped: building a coend solves exact linear systems.

@pytest.fixture(scope="session")
def vect():
    return load_category(DATA_DIR / "vect.json")


@pytest.fixture(scope="session")
def toric():
    return load_category(DATA_DIR / "toric.json")


@pytest.fixture(scope="session")
def dz2_hopf():
    return load_category(DATA_DIR / "dz2_hopf.json")


@pytest.fixture(scope="session")
def sweedler_double():
    return load_category(DATA_DIR / "sweedler_double.json")


@pytest.fixture(scope="session")
def toric_coend(toric):
    return build_coend_K(toric)


@pytest.fixture(scope="session")
def vect_coend(vect):
    return build_coend_K(vect)


# ============================================================================
# Algebras
# ============================================================================

@pytest.fixture
def algebra_path() -> Generator:
    """Path of a bundled algebra file by stem."""
    def path(stem: str) -> Path:
        return DATA_DIR / "algebras" / f"{stem}.json"
    yield path


@pytest.fixture(scope="session")
def toric_1e():
    return load_algebra(DATA_DIR / "algebras" / "toric_1e.json")


@pytest.fixture(scope="session")
def vect_unit():
    return load_algebra(DATA_DIR / "algebras" / "vect_unit.json")


# ============================================================================
# Environment
# ============================================================================

@pytest.fixture
def single_thread(monkeypatch) -> None:
    """Runs checks sequentially regardless of the caller's CORR_THREADS."""
    monkeypatch.setenv("CORR_THREADS", "1")
