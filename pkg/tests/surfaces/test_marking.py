#!/usr/bin/env python3
"""
Tests for fine markings, their JSON form and sewing

Version: 1.0.0
"""

import pytest

from corrcli.core.errors import DataFormatError, OrientationMismatch, PreconditionViolated, UnknownBoundary
from corrcli.surfaces import (
    IDENTITY_FRAME,
    IN,
    OUT,
    FineMarking,
    disjoint_union,
    load_marking,
    one_holed_torus,
    sew_marking,
    sewing_preparation,
    standard_marking,
)


# ============================================================================
# Standard Markings
# ============================================================================

@pytest.mark.unit
class TestStandardMarking:
    """Chain markings of spheres and tori"""

    def test_pants_is_one_vertex(self):
        M = standard_marking(3)
        assert len(M.vertices) == 1
        assert M.cuts == ()
        assert M.words() == [(("b", "1"), ("b", "2"), ("b", "3"))]

    def test_four_holes_use_a_chain(self):
        M = standard_marking(4)
        assert len(M.vertices) == 2
        assert [c.id for c in M.cuts] == [1]
        assert M.words() == [(("b", "1"), ("b", "2"), ("b", "3"), ("b", "4"))]

    def test_one_holed_torus(self):
        M = one_holed_torus(IN)
        assert M.surface.genus() == 1
        assert M.cuts[0].frame == IDENTITY_FRAME
        assert M.is_self_cut(M.cuts[0].id)
        assert M.component_genus(0) == 1

    def test_closed_torus(self):
        M = standard_marking(0, [], genus=1)
        assert M.surface.boundary_ids() == []
        assert M.component_genus(0) == 1

    def test_genus_two_has_two_handle_cuts(self):
        M = standard_marking(1, genus=2)
        framed = [c for c in M.cuts if c.frame is not None]
        assert len(framed) == 2
        assert M.component_genus(0) == 2

    def test_orientation_count_must_match(self):
        with pytest.raises(DataFormatError):
            standard_marking(3, [OUT, OUT])

    def test_negative_genus_rejected(self):
        with pytest.raises(DataFormatError):
            standard_marking(2, genus=-1)


# ============================================================================
# Validation and Normal Form
# ============================================================================

@pytest.mark.unit
class TestValidation:
    """Rules every fine marking obeys"""

    def test_four_legs_rejected(self):
        data = standard_marking(4).to_json()
        data["vertices"] = [{"id": 0, "legs": ["b:1", "b:2", "b:3", "b:4"]}]
        data["cuts"] = []
        with pytest.raises(DataFormatError):
            FineMarking.from_json(data)

    def test_boundary_must_appear_once(self):
        data = standard_marking(3).to_json()
        data["vertices"] = [{"id": 0, "legs": ["b:1", "b:1", "b:3"]}]
        with pytest.raises(DataFormatError):
            FineMarking.from_json(data)

    def test_malformed_leg(self):
        data = standard_marking(3).to_json()
        data["vertices"] = [{"id": 0, "legs": ["x1", "b:2", "b:3"]}]
        with pytest.raises(DataFormatError):
            FineMarking.from_json(data)

    def test_distinguished_leg_rotates_on_load(self):
        data = standard_marking(3).to_json()
        data["vertices"] = [{"id": 0, "legs": ["b:3", "b:1", "b:2"], "distinguished": 1}]
        assert FineMarking.from_json(data).same_as(standard_marking(3))

    def test_json_keeps_marking(self):
        M = standard_marking(4, [IN, OUT, OUT, IN])
        assert FineMarking.from_json(M.to_json()) == M

    def test_graph_has_one_edge_per_cut(self):
        M = standard_marking(5)
        G = M.graph()
        assert G.number_of_nodes() == 3
        assert G.number_of_edges() == 2


def _theta(second_legs, frame=IDENTITY_FRAME):
    """Torus with two holes cut into two pants joined by the parallel cuts 1 and 2."""
    data = {
        "surface": {"components": [{"genus": 1, "boundary": [{"id": "a", "orientation": OUT},
                                                             {"id": "b", "orientation": OUT}]}]},
        "vertices": [{"id": 0, "legs": ["b:a", "c:2+", "c:1+"]}, {"id": 1, "legs": second_legs}],
        "cuts": [{"id": 1}, {"id": 2, **({"frame": list(frame)} if frame else {})}],
    }
    return FineMarking.from_json(data)


@pytest.mark.unit
class TestCycleCuts:
    """Cut graphs with a cycle: one cut of the cycle carries the frame"""

    def test_framed_cycle_cut_validates(self):
        M = _theta(["c:1-", "c:2-", "b:b"])
        assert M.is_chord(2)
        assert not M.is_chord(1)
        assert M.parallel_cuts(2) == [1]
        assert M.component_genus(0) == 1

    def test_cycle_cut_reads_as_one_k(self):
        M = _theta(["c:1-", "c:2-", "b:b"])
        assert M.words() == [(("b", "a"), ("K", 2), ("b", "b"))]

    def test_separated_ends_have_no_word(self):
        M = _theta(["c:1-", "b:b", "c:2-"])
        with pytest.raises(PreconditionViolated):
            M.words()

    def test_unframed_cycle_rejected(self):
        with pytest.raises(PreconditionViolated):
            _theta(["c:1-", "c:2-", "b:b"], frame=None)

    def test_framed_tree_cut_rejected(self):
        data = standard_marking(4).to_json()
        data["cuts"] = [{"id": 1, "frame": list(IDENTITY_FRAME)}]
        with pytest.raises(DataFormatError):
            FineMarking.from_json(data)

    def test_handle_needs_frame(self):
        data = one_holed_torus().to_json()
        data["cuts"] = [{"id": c["id"]} for c in data["cuts"]]
        with pytest.raises(DataFormatError):
            FineMarking.from_json(data)


# ============================================================================
# Bundled Marking Files
# ============================================================================

@pytest.mark.unit
class TestBundledMarkings:
    """Marking files under data/markings load and validate"""

    @pytest.mark.parametrize("stem", ["pants", "four_holed_sphere", "one_holed_torus", "two_pants"])
    def test_loads(self, data_dir, stem):
        M = load_marking(data_dir / "markings" / f"{stem}.json")
        assert M.vertices

    def test_two_pants_has_two_components(self, data_dir):
        M = load_marking(data_dir / "markings" / "two_pants.json")
        assert len(M.surface.components) == 2
        assert len(M.words()) == 2

    def test_missing_file(self, temp_dir):
        with pytest.raises(DataFormatError):
            load_marking(temp_dir / "nope.json")


# ============================================================================
# Sewing
# ============================================================================

@pytest.mark.unit
class TestSewing:
    """Sewing an incoming circle to an outgoing one"""

    def test_sew_two_components(self, data_dir):
        M = load_marking(data_dir / "markings" / "two_pants.json")
        N, cid = sew_marking(M, "a", "b")
        assert cid == 1
        assert len(N.surface.components) == 1
        assert sorted(N.surface.boundary_ids()) == ["1", "2", "3", "4"]
        assert N.surface.genus() == 0
        assert N.cut(cid).frame is None

    def test_sew_one_vertex_adds_a_handle(self):
        M = standard_marking(3, [IN, OUT, OUT])
        N, cid = sew_marking(M, "1", "2")
        assert N.surface.genus() == 1
        assert N.cut(cid).frame == IDENTITY_FRAME
        assert N.surface.boundary_ids() == ["3"]

    def test_orientation_mismatch(self):
        M = standard_marking(3)
        with pytest.raises(OrientationMismatch):
            sew_marking(M, "1", "2")

    def test_unknown_boundary(self):
        M = standard_marking(3, [IN, OUT, OUT])
        with pytest.raises(UnknownBoundary):
            sew_marking(M, "9", "2")

    def test_different_vertices_of_one_component_are_gathered(self):
        M = standard_marking(4, [IN, OUT, OUT, OUT])
        assert M.boundary_vertex("1")[0] != M.boundary_vertex("4")[0]
        assert [mv.kind for mv in sewing_preparation(M, "1", "4")] == ["A"]
        N, cid = sew_marking(M, "1", "4")
        assert N.surface.genus() == 1
        assert sorted(N.surface.boundary_ids()) == ["2", "3"]
        assert N.is_self_cut(cid)
        assert N.cut(cid).frame == IDENTITY_FRAME

    def test_circles_on_one_vertex_need_no_moves(self):
        M = standard_marking(4, [IN, OUT, OUT, OUT])
        assert sewing_preparation(M, "1", "2") == []

    def test_disjoint_union_shifts_ids(self):
        first = standard_marking(4)
        second = standard_marking(4, ids=["5", "6", "7", "8"])
        U = disjoint_union(first, second)
        assert len(U.surface.components) == 2
        assert sorted(c.id for c in U.cuts) == [1, 2]
        assert len({v.id for v in U.vertices}) == 4
