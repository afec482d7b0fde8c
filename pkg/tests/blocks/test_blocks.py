#!/usr/bin/env python3
"""
Unit Tests for corrcli.blocks

Tests the pinned block functor including:
- Block space dimensions for the toric code with F = 1 + e
- Move and word matrices
- Relations as exact matrix identities
- Sewing maps and transport between markings

Version: 1.0.0
"""

import pytest

from corrcli.blocks import (
    BlockFunctor,
    check_relations_on_blocks,
    find_move_path,
    move_matrix,
    sew_map,
    sewing_sequence,
    transport,
    word_matrix,
)
from corrcli.category import load_category
from corrcli.coend import build_coend_K
from corrcli.core.errors import NotSameSurface, ShapeMismatch
from corrcli.scalars import Matrix
from corrcli.surfaces import IN, OUT, Move, apply_move, apply_word, load_marking, one_holed_torus, standard_marking
from corrcli.surfaces.relations import relation_instances


@pytest.fixture(scope="module")
def toric_blocks(data_dir):
    """Block functor of a private toric category with F = 1 + e."""
    C = load_category(data_dir / "toric.json")
    F = C.register_object("F", ["1", "e"])
    return BlockFunctor(build_coend_K(C), F)


@pytest.fixture(scope="module")
def toric_unit_blocks(data_dir):
    C = load_category(data_dir / "toric.json")
    return BlockFunctor(build_coend_K(C), C.unit())


# ============================================================================
# Test Block Spaces
# ============================================================================

class TestBlockSpaces:
    """Dimensions of Hom(1, W) for traversal words W."""

    @pytest.mark.unit
    def test_cylinder(self, toric_blocks):
        assert toric_blocks.dim(standard_marking(2)) == 2

    @pytest.mark.unit
    def test_pants(self, toric_blocks):
        assert toric_blocks.dim(standard_marking(3)) == 4

    @pytest.mark.unit
    def test_four_holed_sphere(self, toric_blocks):
        assert toric_blocks.dim(standard_marking(4)) == 8

    @pytest.mark.unit
    def test_one_holed_torus(self, toric_blocks):
        assert toric_blocks.dim(one_holed_torus(IN)) == 4

    @pytest.mark.unit
    def test_vect_unit_is_one_dimensional(self, vect_coend):
        bf = BlockFunctor(vect_coend, vect_coend.category.unit())
        assert bf.dim(standard_marking(3)) == 1
        assert bf.dim(one_holed_torus()) == 1

    @pytest.mark.unit
    def test_disjoint_union_is_tensor_product(self, toric_blocks, data_dir):
        M = load_marking(data_dir / "markings" / "two_pants.json")
        space = toric_blocks.space(M)
        assert space.dims == (4, 4)
        assert space.dim == 16

    @pytest.mark.unit
    def test_space_json(self, toric_blocks):
        data = toric_blocks.space(standard_marking(3, [IN, OUT, OUT])).to_json()
        assert data["dim"] == 4
        assert data["genus"] == [0]
        assert data["signs"] == {"1": IN, "2": OUT, "3": OUT}
        assert data["components"][0]["word"] == ["b:1", "b:2", "b:3"]

    @pytest.mark.unit
    def test_vector_needs_one_piece_per_component(self, toric_blocks):
        with pytest.raises(ShapeMismatch):
            toric_blocks.vector(standard_marking(3), [])


# ============================================================================
# Test Move Matrices
# ============================================================================

class TestMoveMatrices:
    """Matrices of moves between block spaces."""

    @pytest.mark.unit
    def test_rotation_cubed_is_identity(self, toric_blocks):
        matrix, path = word_matrix(toric_blocks, standard_marking(3), [Move.z(0)] * 3)
        assert matrix.is_identity()
        assert path[-1] == standard_marking(3)

    @pytest.mark.unit
    def test_move_matrix_shape(self, toric_blocks):
        M = standard_marking(4)
        matrix, N = move_matrix(toric_blocks, M, Move.a(1))
        assert matrix.shape == (toric_blocks.dim(N), toric_blocks.dim(M))
        assert matrix.is_invertible()

    @pytest.mark.unit
    def test_s_on_torus_is_invertible(self, toric_blocks):
        matrix, _ = move_matrix(toric_blocks, one_holed_torus(), Move.s(1))
        assert matrix.shape == (4, 4)
        assert matrix.is_invertible()

    @pytest.mark.unit
    def test_empty_word_is_identity(self, toric_blocks):
        matrix, path = word_matrix(toric_blocks, standard_marking(3), [])
        assert matrix == Matrix.identity(4)
        assert len(path) == 1

    @pytest.mark.unit
    def test_twist_around_a_cycle_cut_is_undone(self, toric_unit_blocks):
        instance = relation_instances("two_holed_torus")[0]
        N = apply_word(instance.marking, instance.rhs[:2])[-1]
        [parallel] = N.parallel_cuts(2)
        matrix, path = word_matrix(toric_unit_blocks, N, [Move.t(parallel), Move.t(parallel, inverse=True)])
        assert matrix.is_identity()
        assert path[-1] == N

    @pytest.mark.unit
    def test_slide_through_a_handle_is_invertible(self, toric_unit_blocks):
        instance = relation_instances("two_holed_torus")[0]
        M = apply_word(instance.marking, instance.lhs[:3])[-1]
        matrix, N = move_matrix(toric_unit_blocks, M, Move.a(2))
        assert matrix.shape == (toric_unit_blocks.dim(N), toric_unit_blocks.dim(M))
        assert matrix.is_invertible()


# ============================================================================
# Test Relations on Blocks
# ============================================================================

class TestRelationsOnBlocks:
    """Both sides of every bundled relation give equal matrices."""

    @pytest.mark.unit
    def test_unit_object(self, toric_unit_blocks):
        result = check_relations_on_blocks(toric_unit_blocks)
        assert result["success"], result.get("error")
        assert result["normalized"]

    @pytest.mark.unit
    def test_one_plus_e(self, toric_blocks):
        result = check_relations_on_blocks(toric_blocks)
        assert result["success"], [r.get("error") for r in result["results"] if not r["success"]]

    @pytest.mark.slow
    def test_two_holed_torus_unit(self, toric_unit_blocks):
        result = check_relations_on_blocks(toric_unit_blocks, names=["W13"])
        assert result["success"], result["results"][0].get("error")
        assert len(result["results"]) == 1

    @pytest.mark.slow
    def test_two_holed_torus_one_plus_e(self, toric_blocks):
        result = check_relations_on_blocks(toric_blocks, names=["two_holed_torus"])
        assert result["success"], result["results"][0].get("error")

    @pytest.mark.unit
    def test_w13_left_out_by_default(self, toric_unit_blocks):
        names = [r["name"] for r in check_relations_on_blocks(toric_unit_blocks)["results"]]
        assert "two_holed_torus" not in names

    @pytest.mark.unit
    def test_selected_relation(self, toric_blocks):
        result = check_relations_on_blocks(toric_blocks, names=["pentagon"])
        assert result["success"]
        assert len(result["results"]) == 1


# ============================================================================
# Test Sewing and Transport
# ============================================================================

class TestSewingAndTransport:
    """Sewing maps and move paths between markings."""

    @pytest.mark.unit
    def test_sew_two_components(self, toric_blocks, data_dir):
        M = load_marking(data_dir / "markings" / "two_pants.json")
        sewing = sew_map(toric_blocks, M, "a", "b")
        assert sewing.matrix.shape == (8, 16)
        assert not sewing.self_sewing
        assert sewing.j_eps == "id"

    @pytest.mark.unit
    def test_self_sewing_lands_on_torus(self, toric_blocks):
        M = standard_marking(3, [IN, OUT, OUT])
        sewing = sew_map(toric_blocks, M, "1", "2")
        assert sewing.self_sewing
        assert sewing.target.dim == 4
        assert sewing.matrix.shape == (4, 4)

    @pytest.mark.unit
    def test_self_sewing_across_vertices(self, toric_blocks):
        M = standard_marking(4, [IN, OUT, OUT, OUT])
        sewing = sew_map(toric_blocks, M, "1", "4")
        assert sewing.self_sewing
        assert [mv.kind for mv in sewing.gathering] == ["A"]
        assert sewing.matrix.shape == (sewing.target.dim, toric_blocks.dim(M))
        gathered = apply_word(M, sewing.gathering)[-1]
        direct = sew_map(toric_blocks, gathered, "1", "4")
        assert direct.gathering == ()
        assert direct.target.marking == sewing.target.marking
        moved = transport(toric_blocks, M, gathered, list(sewing.gathering))
        assert sewing.matrix == direct.matrix @ moved

    @pytest.mark.unit
    def test_sewing_sequence_path(self, toric_blocks, data_dir):
        M = load_marking(data_dir / "markings" / "two_pants.json")
        matrix, path = sewing_sequence(toric_blocks, M, [("a", "b")])
        assert len(path) == 2
        assert matrix.shape == (8, 16)

    @pytest.mark.unit
    def test_path_of_one_rotation(self):
        M = standard_marking(3)
        word = find_move_path(M, apply_move(M, Move.z(0)))
        assert word == [Move.z(0)]

    @pytest.mark.unit
    def test_path_to_itself_is_empty(self):
        assert find_move_path(standard_marking(4), standard_marking(4)) == []

    @pytest.mark.unit
    def test_transport_matches_move_matrix(self, toric_blocks):
        M = standard_marking(3)
        target = apply_move(M, Move.z(0))
        expected, _ = move_matrix(toric_blocks, M, Move.z(0))
        assert transport(toric_blocks, M, target) == expected

    @pytest.mark.unit
    def test_different_surfaces(self):
        with pytest.raises(NotSameSurface):
            find_move_path(standard_marking(3), standard_marking(4))
