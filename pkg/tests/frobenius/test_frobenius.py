#!/usr/bin/env python3
"""
Unit Tests for corrcli.frobenius

Tests Frobenius algebras on the bulk object including:
- Loading algebra files in every supported format
- The axiom suite, including the trivial-twist failure of 1 + f
- Modularity S_K v = v and the modular invariant of canonical algebras

Version: 1.0.0
"""

import json

import pytest

from corrcli.category import load_category
from corrcli.coend import build_coend_K
from corrcli.core.errors import CategoryNotModular, DataFormatError
from corrcli.frobenius import (
    check_axioms,
    check_modular,
    from_generators,
    load_algebra,
    modular_invariant,
)


# ============================================================================
# Test Loading
# ============================================================================

class TestLoading:
    """Algebra files resolve their category and build (m, eta, Delta, eps)."""

    @pytest.mark.unit
    def test_toric_one_plus_e(self, toric_1e):
        assert toric_1e.name == "toric_1e"
        summary = toric_1e.summary()
        assert summary["dim_hom_1_F"] == 1
        assert summary["dim_hom_1_FFF"] == 4

    @pytest.mark.unit
    def test_vect_unit(self, vect_unit):
        assert vect_unit.summary()["dim_hom_1_F"] == 1

    @pytest.mark.unit
    def test_hopf_backend(self, algebra_path):
        A = load_algebra(algebra_path("dz2_unit"))
        assert A.category.backend == "hopf"

    @pytest.mark.unit
    def test_explicit_category(self, algebra_path, data_dir):
        C = load_category(data_dir / "toric.json")
        A = load_algebra(algebra_path("toric_1m"), category=C)
        assert A.category is C

    @pytest.mark.unit
    def test_unsupported_format_version(self, temp_dir, algebra_path):
        doc = json.loads(algebra_path("toric_unit").read_text())
        doc["format_version"] = 2
        path = temp_dir / "future.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(DataFormatError):
            load_algebra(path)

    @pytest.mark.unit
    def test_missing_category(self, temp_dir, algebra_path):
        doc = json.loads(algebra_path("toric_unit").read_text())
        del doc["category"]
        path = temp_dir / "orphan.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(DataFormatError):
            load_algebra(path)

    @pytest.mark.unit
    def test_generators_rebuild_the_algebra(self, toric_1e):
        omega, eps, Phi = toric_1e.to_generators()
        rebuilt = from_generators(toric_1e.category, toric_1e.F, omega, eps, Phi)
        assert rebuilt.m.equals_matrixwise(toric_1e.m)
        assert rebuilt.Delta.equals_matrixwise(toric_1e.Delta)

    @pytest.mark.unit
    def test_product_reads_the_first_leg_of_omega(self, toric_1e):
        # omega + eta (x) Delta(eta) is not cyclic; pairing its last two legs
        # with the inputs adds eta o kappa to the product
        C, A = toric_1e.category, toric_1e
        skewed = A.omega + C.tensor(A.eta, C.compose(A.Delta, A.eta))
        rebuilt = from_generators(C, A.F, skewed, A.eps, A.Phi)
        assert rebuilt.m.equals_matrixwise(A.m + C.compose(A.eta, A.kappa))
        assert not rebuilt.m.equals_matrixwise(A.m)


# ============================================================================
# Test Axioms
# ============================================================================

class TestAxioms:
    """Commutative symmetric Frobenius algebras with trivial twist."""

    @pytest.mark.unit
    @pytest.mark.parametrize("stem", ["toric_1e", "toric_1m", "toric_unit", "vect_unit", "dz2_unit"])
    def test_bundled_algebras_pass(self, algebra_path, stem):
        result = check_axioms(load_algebra(algebra_path(stem)))
        assert result["success"], result.get("error")
        assert result["failed"] == []

    @pytest.mark.unit
    def test_fermion_breaks_trivial_twist(self, algebra_path):
        result = check_axioms(load_algebra(algebra_path("toric_1f")))
        assert not result["success"]
        assert "trivial_twist" in result["failed"]

    @pytest.mark.unit
    def test_every_axiom_is_reported(self, toric_1e):
        result = check_axioms(toric_1e)
        keys = [c["check"] for c in result["checks"]]
        assert keys[0] == "associativity"
        assert "frobenius" in keys
        assert "symmetry" in keys
        assert len(keys) == len(set(keys))


# ============================================================================
# Test Modularity
# ============================================================================

class TestModularity:
    """S_K o v = v for the modular vector v: F -> K."""

    @pytest.mark.unit
    @pytest.mark.parametrize("stem", ["toric_1e", "toric_1m"])
    def test_lagrangian_algebras_are_modular(self, algebra_path, stem):
        A = load_algebra(algebra_path(stem))
        result = check_modular(A, build_coend_K(A.category))
        assert result["success"], result.get("error")
        assert result["modular"]

    @pytest.mark.unit
    def test_unit_algebra_is_not_modular(self, algebra_path):
        A = load_algebra(algebra_path("toric_unit"))
        result = check_modular(A, build_coend_K(A.category))
        assert not result["success"]
        assert not result["modular"]
        assert result["first_difference"] is not None

    @pytest.mark.unit
    def test_unit_algebra_residual_is_integral_minus_unit(self, algebra_path):
        # S_K o eta_K = Lambda_K, so the unit algebra misses modularity by Lambda_K - eta_K
        A = load_algebra(algebra_path("toric_unit"))
        C = A.category
        K = build_coend_K(C)
        result = check_modular(A, K)
        eta_K = C.coend_inclusion(C.obj("1"))
        expected = K.integral - C.relabel(eta_K, K.integral.dom, K.integral.cod)
        assert not expected.is_zero()
        assert result["residual"]["blocks"] == expected.to_json()["blocks"]

    @pytest.mark.unit
    def test_vect_unit_is_modular(self, vect_unit, vect_coend):
        assert check_modular(vect_unit, vect_coend)["modular"]

    @pytest.mark.unit
    def test_symmetric_category_refused(self, algebra_path, data_dir):
        C = load_category(data_dir / "rep_z2_symmetric.json")
        A = load_algebra(algebra_path("toric_unit"), category=C)
        with pytest.raises(CategoryNotModular):
            check_modular(A, build_coend_K(C))


# ============================================================================
# Test Modular Invariant
# ============================================================================

class TestModularInvariant:
    """Z_ij counts the summands i.j of F on a Deligne product."""

    @pytest.mark.unit
    def test_needs_deligne_product(self, toric_1e):
        assert not modular_invariant(toric_1e)["success"]

    @pytest.mark.slow
    def test_canonical_algebra_gives_identity(self, algebra_path):
        result = modular_invariant(load_algebra(algebra_path("fib2_canonical")))
        assert result["success"]
        assert result["rows"] == ["1", "t"]
        assert result["Z"] == [["1", "0"], ["0", "1"]]
