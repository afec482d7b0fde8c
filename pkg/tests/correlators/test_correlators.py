#!/usr/bin/env python3
"""
Unit Tests for corrcli.correlators

Tests correlators of modular Frobenius algebras including:
- The closed formula v^g_{p|q} and its block vectors
- Elementary spheres and cut-and-sew
- Non-degeneracy, S-invariance and the (omega, eps, Phi) round trip
- The full consistency run and its early exit on failing axioms

Version: 1.0.0
"""

import pytest

from corrcli.coend import build_coend_K
from corrcli.core.errors import InvalidSphereType, PreconditionViolated
from corrcli.blocks import BlockFunctor
from corrcli.correlators import (
    CorrelatorSystem,
    check_consistency,
    check_surface,
    closed_versus_sewn,
    cut_apart,
    elementary_correlator,
    elementary_vector,
    move_invariance,
    nondegeneracy,
    reference_marking,
    s_invariance,
    scope_markings,
    verify_bijection_roundtrip,
)
from corrcli.frobenius import load_algebra
from corrcli.surfaces import IN, OUT, ExtendedSurface, standard_marking


@pytest.fixture(scope="module")
def toric_system(toric_1e):
    return CorrelatorSystem(toric_1e, build_coend_K(toric_1e.category))


@pytest.fixture(scope="module")
def toric_bf(toric_system):
    return BlockFunctor(toric_system.coend, toric_system.F)


@pytest.fixture(scope="module")
def vect_system(vect_unit):
    return CorrelatorSystem(vect_unit, build_coend_K(vect_unit.category))


# ============================================================================
# Test Correlator System
# ============================================================================

class TestCorrelatorSystem:
    """The closed formula and its memoization."""

    @pytest.mark.unit
    def test_cylinder_is_identity(self, toric_system):
        C = toric_system.category
        assert toric_system.correlator(0, 1, 1).equals_matrixwise(C.identity(toric_system.F))

    @pytest.mark.unit
    def test_cache_keys(self, toric_system):
        toric_system.correlator(0, 2, 1)
        assert (0, 2, 1) in toric_system.cached()

    @pytest.mark.unit
    def test_negative_counts_rejected(self, toric_system):
        with pytest.raises(PreconditionViolated):
            toric_system.correlator(0, -1, 2)

    @pytest.mark.unit
    def test_categories_must_agree(self, toric_1e, toric_coend):
        with pytest.raises(PreconditionViolated):
            CorrelatorSystem(toric_1e, toric_coend)

    @pytest.mark.unit
    def test_vector_bends_inputs(self, toric_system):
        v = toric_system.vector(0, 1, 2)
        assert v.dom.is_unit()
        assert v.cod == toric_system.F.power(2) @ toric_system.F.dual()


# ============================================================================
# Test Elementary Spheres and Sewing
# ============================================================================

class TestElementaryAndSewing:
    """Spheres with at most three holes, and cutting markings apart."""

    @pytest.mark.unit
    def test_four_holes_are_not_elementary(self, toric_system):
        with pytest.raises(InvalidSphereType):
            elementary_correlator(toric_system, [OUT] * 4)

    @pytest.mark.unit
    def test_elementary_vector_needs_cut_free_marking(self, toric_system, toric_bf):
        with pytest.raises(InvalidSphereType):
            elementary_vector(toric_system, toric_bf, standard_marking(4))

    @pytest.mark.unit
    def test_cut_apart(self):
        pieces, pairs = cut_apart(standard_marking(4))
        assert len(pieces.surface.components) == 2
        assert pieces.cuts == ()
        assert pairs == [("c1-", "c1+")]

    @pytest.mark.unit
    def test_reference_marking_keeps_boundary_order(self):
        surface = ExtendedSurface.sphere([OUT, IN])
        M = reference_marking(surface)
        assert M.surface == surface
        assert M.words() == [(("b", "1"), ("b", "2"))]

    @pytest.mark.unit
    def test_standard_marking_is_its_own_reference(self):
        M = standard_marking(4, [OUT, IN, OUT, IN], genus=1)
        assert reference_marking(M.surface).same_as(M)

    @pytest.mark.unit
    @pytest.mark.parametrize("eps", [[OUT, OUT, OUT], [IN, OUT, OUT], [IN, IN, OUT, OUT]])
    def test_closed_formula_equals_sewn(self, toric_system, toric_bf, eps):
        M = standard_marking(len(eps), eps)
        result = closed_versus_sewn(toric_system, toric_bf, M)
        assert result["success"], result.get("first_difference")

    @pytest.mark.unit
    def test_moves_preserve_pants_correlator(self, toric_system, toric_bf):
        result = move_invariance(toric_system, toric_bf, standard_marking(3, [IN, OUT, OUT]))
        assert result["success"], result.get("error")


# ============================================================================
# Test Global Checks
# ============================================================================

class TestGlobalChecks:
    """Non-degeneracy, S-invariance and the generator round trip."""

    @pytest.mark.unit
    def test_nondegeneracy(self, toric_system, vect_system):
        assert nondegeneracy(toric_system)["success"]
        assert nondegeneracy(vect_system)["success"]

    @pytest.mark.unit
    def test_s_invariance(self, toric_system, toric_bf):
        result = s_invariance(toric_system, toric_bf)
        assert result["success"], result.get("error")

    @pytest.mark.unit
    def test_roundtrip(self, toric_system, vect_system):
        for system in (toric_system, vect_system):
            result = verify_bijection_roundtrip(system)
            assert result["success"], result.get("error")

    @pytest.mark.unit
    def test_scope_counts(self):
        assert len(list(scope_markings(0, 2))) == 5
        assert len(list(scope_markings(1, 2))) == 11
        assert len(list(scope_markings(0, 2, all_orientations=True))) == 6


# ============================================================================
# Test Consistency Runs
# ============================================================================

class TestConsistency:
    """Full verification runs."""

    @pytest.mark.unit
    def test_vect_unit_up_to_genus_one(self, vect_system, single_thread):
        result = check_consistency(vect_system, max_genus=1, max_holes=2)
        assert result["success"], result.get("error")
        assert len(result["surfaces"]) == 11
        assert [g["name"] for g in result["global_checks"]] == [
            "relation invariance", "non-degeneracy", "S invariance"]

    @pytest.mark.unit
    def test_failing_axioms_stop_early(self, algebra_path):
        A = load_algebra(algebra_path("toric_1f"))
        result = check_consistency(CorrelatorSystem(A, build_coend_K(A.category)))
        assert not result["success"]
        assert result["surfaces"] == []
        assert "trivial_twist" in result["axioms"]["failed"]

    @pytest.mark.unit
    def test_surface_report(self, toric_system, toric_bf):
        result = check_surface(toric_system, toric_bf, standard_marking(3))
        assert result["success"], result.get("error")
        assert result["name"] == "g0[+++]"
        assert result["dim"] == 4

    @pytest.mark.slow
    def test_toric_one_plus_e_in_genus_zero(self, toric_system):
        result = check_consistency(toric_system, max_genus=0, max_holes=3)
        assert result["success"], result.get("error")

    @pytest.mark.slow
    @pytest.mark.parametrize("eps", [
        [OUT, IN, IN, OUT], [OUT, IN, OUT, IN], [OUT, OUT, IN, IN], [OUT, OUT, OUT, IN],
    ])
    def test_interleaved_four_holed_tori(self, toric_system, toric_bf, eps):
        result = check_surface(toric_system, toric_bf, standard_marking(4, eps, genus=1))
        assert result["success"], result.get("error")

    @pytest.mark.slow
    def test_toric_one_plus_e_every_orientation_up_to_genus_one(self, toric_system):
        result = check_consistency(toric_system, max_genus=1, max_holes=4, all_orientations=True)
        assert result["success"], result.get("error")
        assert len(result["surfaces"]) == 61
