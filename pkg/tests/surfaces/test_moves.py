#!/usr/bin/env python3
"""
Tests for elementary moves on fine markings

Version: 1.0.0
"""

import pytest

from corrcli.core.errors import DataFormatError, InvalidLocation, PreconditionViolated
from corrcli.surfaces import (
    IDENTITY_FRAME,
    IN,
    OUT,
    Move,
    apply_move,
    apply_word,
    candidate_moves,
    inverse_move,
    is_admissible,
    one_holed_torus,
    standard_marking,
)
from corrcli.surfaces.relations import relation_instances
from corrcli.surfaces.search import neighbours


# ============================================================================
# Move Values
# ============================================================================

@pytest.mark.unit
class TestMoveValues:
    """Construction, printing and JSON form of moves"""

    def test_unknown_kind(self):
        with pytest.raises(DataFormatError):
            Move("Q", vertex=0)

    @pytest.mark.parametrize("move,text", [
        (Move.z(0), "Z(v0)"),
        (Move.z(0, inverse=True), "Z^-1(v0)"),
        (Move.s(1), "S(c1)"),
        (Move.f_split(2, 1), "F^-1(v2@1)"),
        (Move.c(0), "C(k0)"),
    ])
    def test_str(self, move, text):
        assert str(move) == text

    def test_json_form(self):
        mv = Move.f_split(0, 2, side=-1)
        data = mv.to_json()
        assert data == {"kind": "F", "vertex": 0, "split": 2, "side": -1, "inverse": True}
        assert Move.from_json(data) == mv

    def test_malformed_json(self):
        with pytest.raises(DataFormatError):
            Move.from_json({"vertex": 0})

    def test_inverted_flips_direction(self):
        assert Move.t(1).inverted() == Move.t(1, inverse=True)

    def test_inverted_refuses_associativity(self):
        with pytest.raises(PreconditionViolated):
            Move.a(1).inverted()


# ============================================================================
# Rotation and Braiding
# ============================================================================

@pytest.mark.unit
class TestRotationAndBraiding:
    """Z rotates the legs of a vertex, B exchanges two of them"""

    def test_z_rotates_left(self):
        M = apply_move(standard_marking(3), Move.z(0))
        assert M.words() == [(("b", "2"), ("b", "3"), ("b", "1"))]

    def test_z_three_times_is_trivial(self):
        M = standard_marking(3)
        assert apply_word(M, [Move.z(0)] * 3)[-1] == M

    def test_z_inverse_undoes_z(self):
        M = standard_marking(3)
        assert apply_word(M, [Move.z(0), Move.z(0, inverse=True)])[-1] == M

    def test_b_swaps_last_two_legs(self):
        M = apply_move(standard_marking(3), Move.b(0))
        assert M.words() == [(("b", "1"), ("b", "3"), ("b", "2"))]

    def test_apply_word_returns_path(self):
        path = apply_word(standard_marking(3), [Move.z(0), Move.b(0)])
        assert len(path) == 3

    def test_unknown_vertex(self):
        with pytest.raises(InvalidLocation):
            apply_move(standard_marking(3), Move.z(7))


# ============================================================================
# Fusion and Associativity
# ============================================================================

@pytest.mark.unit
class TestFusionAndAssociativity:
    """F contracts or splits at a cut, A re-cuts a 4-holed sphere"""

    def test_fusion_limited_to_three_legs(self):
        with pytest.raises(PreconditionViolated):
            apply_move(standard_marking(4), Move.f(1))

    def test_fusion_then_inverse(self):
        M = relation_instances("braiding_fusion")[0].marking
        mv = Move.f(1)
        N = apply_move(M, mv)
        assert len(N.vertices) == 1
        back = apply_move(N, inverse_move(M, mv))
        assert back.same_as(M)

    def test_associativity_then_inverse(self):
        M = standard_marking(4)
        N = apply_move(M, Move.a(1))
        assert not N.same_as(M)
        assert apply_move(N, inverse_move(M, Move.a(1))).same_as(M)

    def test_handle_cut_cannot_be_fused(self):
        with pytest.raises(InvalidLocation):
            apply_move(one_holed_torus(), Move.f(1))


# ============================================================================
# Handle Moves
# ============================================================================

@pytest.mark.unit
class TestHandleMoves:
    """S and T act on the frame of a handle cut, C on the central counter"""

    def test_s_has_order_four(self):
        M = one_holed_torus()
        path = apply_word(M, [Move.s(1)] * 4)
        assert path[2].cut(1).frame == (-1, 0, 0, -1)
        assert path[-1] == M

    def test_t_inverse(self):
        M = one_holed_torus()
        N = apply_move(M, Move.t(1))
        assert N.cut(1).frame == (1, 1, 0, 1)
        assert apply_move(N, Move.t(1, inverse=True)).cut(1).frame == IDENTITY_FRAME

    def test_s_needs_handle_cut(self):
        with pytest.raises(InvalidLocation):
            apply_move(standard_marking(4), Move.s(1))

    def test_c_counts(self):
        M = apply_word(one_holed_torus(), [Move.c(0), Move.c(0)])[-1]
        assert M.central == 2
        assert M.same_as(one_holed_torus(), ignore_central=True)
        assert not M.same_as(one_holed_torus())


@pytest.mark.unit
class TestCycleMoves:
    """Moves on markings whose cut graph has a framed cycle cut"""

    @pytest.fixture
    def handle_slide(self):
        return relation_instances("two_holed_torus")[0]

    def test_a_at_tree_cut_makes_the_handle_a_cycle_cut(self, handle_slide):
        N = apply_move(handle_slide.marking, Move.a(1))
        assert N.is_chord(2)
        assert N.cut(2).frame == IDENTITY_FRAME

    def test_a_at_cycle_cut_hands_over_the_frame(self, handle_slide):
        path = apply_word(handle_slide.marking, handle_slide.lhs[:5])
        before, after = path[3], path[4]
        assert before.is_chord(2)
        handles = [c for c in after.cuts if after.is_self_cut(c.id)]
        assert [c.frame for c in handles] == [(-1, 0, 0, -1)]
        assert not after.has_chords()

    def test_t_at_parallel_cut_twists_the_cycle_cut(self, handle_slide):
        N = apply_move(handle_slide.marking, Move.a(1))
        [parallel] = N.parallel_cuts(2)
        twisted = apply_move(N, Move.t(parallel))
        assert twisted.cut(2).frame == (1, 1, 0, 1)
        assert twisted.cut(parallel).frame is None
        assert apply_move(twisted, Move.t(parallel, inverse=True)) == N

    def test_t_needs_a_framed_neighbour(self):
        with pytest.raises(InvalidLocation):
            apply_move(standard_marking(4), Move.t(1))

    def test_search_stays_off_cycle_cuts(self, handle_slide):
        found = neighbours(handle_slide.marking, len(handle_slide.marking.vertices))
        assert found
        assert not any(N.has_chords() for _, N in found)


# ============================================================================
# Admissibility and Candidates
# ============================================================================

@pytest.mark.unit
class TestAdmissibility:
    """Words must respect the orientation of boundary circles"""

    def test_swap_of_equal_orientations(self):
        assert is_admissible([Move.b(0)], standard_marking(3, [IN, OUT, OUT]))

    def test_swap_of_opposite_orientations(self):
        assert not is_admissible([Move.b(0)], standard_marking(3, [OUT, IN, OUT]))

    def test_rotation_is_admissible(self):
        assert is_admissible([Move.z(0)], standard_marking(3, [OUT, IN, OUT]))

    def test_candidates_on_pants(self):
        moves = candidate_moves(standard_marking(3), kinds=("Z",))
        assert moves == [Move.z(0), Move.z(0, inverse=True)]

    def test_candidates_skip_inapplicable(self):
        assert candidate_moves(standard_marking(4), kinds=("F", "A")) == [Move.a(1)]
