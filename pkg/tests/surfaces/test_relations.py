#!/usr/bin/env python3
"""
Tests for the bundled relation instances

Version: 1.0.0
"""

import pytest

from corrcli.surfaces import RELATION_ALIASES, apply_word, check_relation_rewrite, relation_instances, relation_names


@pytest.mark.unit
class TestRelationCatalogue:
    """Names, aliases and the opt-in two-holed torus relation"""

    def test_thirteen_aliases(self):
        assert len(RELATION_ALIASES) == 13
        assert RELATION_ALIASES["W1"] == "commutativity"
        assert RELATION_ALIASES["W2"] == "cylinder"
        assert RELATION_ALIASES["W13"] == "two_holed_torus"

    def test_alias_resolves(self):
        assert [i.name for i in relation_instances("W9")] == ["pentagon"]

    def test_two_holed_torus_is_bundled(self):
        [instance] = relation_instances("W13")
        surface = instance.marking.surface
        assert surface.genus() == 1
        assert len(surface.boundary_ids()) == 2
        assert not instance.marking.has_chords()
        assert any(m.has_chords() for m in apply_word(instance.marking, instance.lhs))

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            relation_instances("octagon")

    def test_names_exclude_two_holed_torus_by_default(self):
        assert "two_holed_torus" not in relation_names()
        assert "two_holed_torus" in relation_names(include_w13=True)

    def test_hexagon_has_both_braidings(self):
        assert len(relation_instances("hexagon")) == 2


@pytest.mark.unit
class TestRelationRewrites:
    """Both sides of every bundled instance reach the same marking"""

    @pytest.mark.parametrize("name", relation_names(include_w13=True))
    def test_rewrite_holds(self, name):
        for instance in relation_instances(name):
            result = check_relation_rewrite(instance)
            assert result["success"], result.get("error")

    def test_cylinder_is_contracted_on_both_sides(self):
        instances = relation_instances("W2")
        assert len(instances) == 3
        for instance in instances:
            left = apply_word(instance.marking, instance.lhs)[-1]
            assert len(left.vertices) == len(instance.marking.vertices) - 1
            assert left.cuts == ()

    def test_two_holed_torus_sides_meet(self):
        [instance] = relation_instances("two_holed_torus")
        left = apply_word(instance.marking, instance.lhs)[-1]
        right = apply_word(instance.marking, instance.rhs)[-1]
        assert left.same_as(right, ignore_central=True)
        assert left.cut(2).frame is not None

    def test_instance_json(self):
        data = relation_instances("twist")[0].to_json()
        assert data["lhs"] == ["B(v0)", "Z(v0)"]
        assert data["rhs"] == ["Z(v0)", "B(v0)"]
