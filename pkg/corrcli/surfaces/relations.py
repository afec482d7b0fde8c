#!/usr/bin/env python3
"""
Corr CLI - Move Relations
Bundled instances of the defining relations between moves

Each instance is a marking together with two words of moves that must lead
to the same marking (central counter aside) and, on blocks, to the same
matrix.

Version: 1.0.0
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..core.logging_config import logger
from ..utils.helpers import _create_result
from .marking import IDENTITY_FRAME, Cut, FineMarking, Vertex, leg_from_str
from .moves import Move, apply_move, apply_word
from .sewing import cylinder_compression, glue_cylinder
from .surface import IN, OUT, Boundary, Component, ExtendedSurface


@dataclass(frozen=True)
class RelationInstance:
    name: str
    description: str
    marking: FineMarking
    lhs: Tuple[Move, ...]
    rhs: Tuple[Move, ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "lhs": [str(m) for m in self.lhs],
            "rhs": [str(m) for m in self.rhs],
        }


def _marking(components: Sequence[Tuple[int, Sequence[Tuple[str, int]]]],
             vertices: Mapping[int, Sequence[str]],
             frames: Optional[Mapping[int, Tuple[int, int, int, int]]] = None) -> FineMarking:
    """components: [(genus, [(boundary id, orientation)])]; vertices: id -> leg strings."""
    frames = frames or {}
    surface = ExtendedSurface(tuple(
        Component(g, tuple(Boundary(b, e) for b, e in bs)) for g, bs in components
    ))
    verts = [Vertex(vid, tuple(leg_from_str(s) for s in legs)) for vid, legs in vertices.items()]
    cut_ids = sorted({leg[1] for v in verts for leg in v.legs if leg[0] == "c"})
    cuts = [Cut(c, frames.get(c)) for c in cut_ids]
    return FineMarking(surface, tuple(sorted(verts, key=lambda v: v.id)), tuple(cuts)).validate()


def _out(*ids: str) -> List[Tuple[str, int]]:
    return [(b, OUT) for b in ids]


# ============================================================================
# Instances
# ============================================================================

def _commutativity() -> List[RelationInstance]:
    M = _marking([(0, _out("a", "b", "c")), (0, _out("d", "e", "f"))],
                 {0: ["b:a", "b:b", "b:c"], 1: ["b:d", "b:e", "b:f"]})
    return [RelationInstance("commutativity", "moves on disjoint pieces commute", M,
                             (Move.z(0), Move.z(1)), (Move.z(1), Move.z(0)))]


def _braiding_fusion() -> List[RelationInstance]:
    M = _marking([(0, [("b", OUT), ("c", OUT), ("x", IN)])],
                 {0: ["c:1-", "b:b", "b:c"], 1: ["b:x", "c:1+"]})
    return [RelationInstance("braiding_fusion", "braiding commutes with fusing a cylinder", M,
                             (Move.b(0), Move.f(1)), (Move.f(1), Move.b(1)))]


def _cylinder() -> List[RelationInstance]:
    """A move commutes with contracting a cylinder glued onto one of its circles."""
    M = _marking([(0, [("x", IN), ("y", OUT), ("z", OUT)])], {0: ["b:x", "b:y", "b:z"]})
    out = []
    for gamma, mv in (("z", Move.b(0)), ("y", Move.z(0)), ("x", Move.z(0, inverse=True))):
        N, cid, cylinder = glue_cylinder(M, gamma)
        moved = apply_move(N, mv)
        lhs = (mv,) + tuple(cylinder_compression(moved, cid, cylinder))
        rhs = tuple(cylinder_compression(N, cid, cylinder)) + (mv,)
        out.append(RelationInstance("cylinder", f"{mv} commutes with contracting a cylinder glued at {gamma}",
                                    N, lhs, rhs))
    return out


def _cyclicity() -> List[RelationInstance]:
    cylinder = _marking([(0, _out("a", "b"))], {0: ["b:a", "b:b"]})
    pants = _marking([(0, _out("a", "b", "c"))], {0: ["b:a", "b:b", "b:c"]})
    return [
        RelationInstance("cyclicity", "rotating a cylinder twice is trivial", cylinder,
                         (Move.z(0), Move.z(0)), ()),
        RelationInstance("cyclicity", "rotating a pants three times is trivial", pants,
                         (Move.z(0), Move.z(0), Move.z(0)), ()),
    ]


def _rotation_fusion() -> List[RelationInstance]:
    M = _marking([(0, _out("p", "q", "r"))], {0: ["b:p", "c:1+"], 1: ["c:1-", "b:q", "b:r"]})
    return [RelationInstance(
        "rotation_fusion", "rotation is compatible with fusion", M,
        (Move.f(1), Move.z(0, inverse=True), Move.z(0, inverse=True)),
        (Move.z(1), Move.z(0, inverse=True), Move.f(1)),
    )]


def _twist() -> List[RelationInstance]:
    M = _marking([(0, _out("a", "b"))], {0: ["b:a", "b:b"]})
    return [RelationInstance("twist", "braiding on a cylinder commutes with rotation", M,
                             (Move.b(0), Move.z(0)), (Move.z(0), Move.b(0)))]


def _fusion_commutativity() -> List[RelationInstance]:
    M = _marking([(0, _out("x", "u", "v"))],
                 {0: ["b:x", "c:1+"], 1: ["c:1-", "c:2+"], 2: ["c:2-", "b:u", "b:v"]})
    return [RelationInstance("fusion_commutativity", "contracting two cuts in either order", M,
                             (Move.f(1), Move.f(2)), (Move.f(2), Move.f(1)))]


def _associativity_involution() -> List[RelationInstance]:
    M = _marking([(0, _out("a", "b", "c", "d"))], {0: ["b:a", "b:b", "c:1+"], 1: ["c:1-", "b:c", "b:d"]})
    return [RelationInstance("associativity_involution", "A applied twice is trivial", M,
                             (Move.a(1), Move.a(2)), ())]


def _associativity_unit() -> List[RelationInstance]:
    M = _marking([(0, _out("a", "b", "c"))],
                 {0: ["b:a", "b:b", "c:1+"], 1: ["c:1-", "b:c", "c:2+"], 2: ["c:2-"]})
    return [RelationInstance("associativity_unit", "A next to a disc reduces to fusion", M,
                             (Move.a(1), Move.f(2), Move.f(3)), (Move.f(2), Move.f(1)))]


def _pentagon() -> List[RelationInstance]:
    M = _marking([(0, _out("a", "b", "c", "d", "e"))],
                 {0: ["b:a", "b:b", "c:1+"], 1: ["c:1-", "b:c", "c:2+"], 2: ["c:2-", "b:d", "b:e"]})
    return [RelationInstance("pentagon", "pentagon of associativity moves", M,
                             (Move.a(1), Move.a(2), Move.a(3)), (Move.a(2), Move.a(1)))]


def _hexagon() -> List[RelationInstance]:
    M = _marking([(0, _out("a", "x", "y", "z"))], {0: ["b:a", "b:x", "c:1+"], 1: ["c:1-", "b:y", "b:z"]})
    out = []
    for inverse, label in ((False, "braiding"), (True, "inverse braiding")):
        word = (Move.a(1), Move.b(1, inverse), Move.a(2), Move.b(1, inverse), Move.a(3))
        out.append(RelationInstance("hexagon", f"hexagon for the {label}", M, word, (Move.b(0, inverse),)))
    return out


def _handle_braiding() -> List[RelationInstance]:
    M = _marking([(1, _out("x"))], {0: ["b:x", "c:1+", "c:1-"]}, {1: IDENTITY_FRAME})
    return [RelationInstance("handle_braiding", "braiding a handle past its boundary is S squared", M,
                             (Move.z(0), Move.b_cut(1)), (Move.s(1), Move.s(1)))]


def _modular() -> List[RelationInstance]:
    M = _marking([(1, _out("x"))], {0: ["b:x", "c:1+", "c:1-"]}, {1: IDENTITY_FRAME})
    word = (Move.t(1), Move.s(1)) * 3
    return [RelationInstance("modular", "(ST)^3 equals S^2 up to the central charge", M,
                             word, (Move.s(1), Move.s(1), Move.c(0)))]


def _two_holed_torus() -> List[RelationInstance]:
    """
    The handle slide on the two-holed torus.

    Both sides pass through the marking where the two circles sit on
    different pants joined by a pair of parallel cuts. The left side turns
    the other cut of the pair into the handle, the right side twists the
    pair in opposite directions between two inverse S moves.
    """
    M = _marking([(1, _out("a", "b"))], {0: ["b:a", "b:b", "c:1+"], 1: ["c:1-", "c:2+", "c:2-"]},
                 {2: IDENTITY_FRAME})
    lhs = (Move.a(1), Move.z(1, inverse=True), Move.z(0), Move.a(2), Move.b(1), Move.z(1),
           Move.z(0, inverse=True))
    rhs = (Move.s(2, inverse=True), Move.a(1), Move.t(3, inverse=True), Move.t(2), Move.a(3),
           Move.s(2, inverse=True))
    return [RelationInstance("two_holed_torus", "sliding a circle through the handle", M, lhs, rhs)]


RELATIONS = {
    "commutativity": _commutativity,
    "cylinder": _cylinder,
    "cyclicity": _cyclicity,
    "rotation_fusion": _rotation_fusion,
    "twist": _twist,
    "fusion_commutativity": _fusion_commutativity,
    "associativity_involution": _associativity_involution,
    "associativity_unit": _associativity_unit,
    "pentagon": _pentagon,
    "hexagon": _hexagon,
    "handle_braiding": _handle_braiding,
    "modular": _modular,
    "two_holed_torus": _two_holed_torus,
    "braiding_fusion": _braiding_fusion,
}

# W1..W13 name the defining relations; later entries are extra consequences
RELATION_ALIASES = {f"W{k + 1}": name for k, name in enumerate(list(RELATIONS)[:13])}


def relation_names(include_w13: bool = False) -> List[str]:
    """Bundled relation names; the two-holed torus instance is slow and only runs on request."""
    return [n for n in RELATIONS if include_w13 or n != "two_holed_torus"]


def relation_instances(name: str) -> List[RelationInstance]:
    """
    Bundled instances of one relation, by name or alias (W1..W13).

    Raises:
        KeyError: unknown relation
    """
    key = RELATION_ALIASES.get(name, name)
    if key not in RELATIONS:
        raise KeyError(f"Unknown relation '{name}'")
    return RELATIONS[key]()


def check_relation_rewrite(instance: RelationInstance) -> Dict[str, Any]:
    """Both words must end at the same marking (the central counter is ignored)."""
    left = apply_word(instance.marking, instance.lhs)[-1]
    right = apply_word(instance.marking, instance.rhs)[-1]
    same = left.same_as(right, ignore_central=True)
    logger.debug(f"relation {instance.name}: markings agree = {same}")
    if same:
        return _create_result(True, message=f"{instance.name}: both sides reach the same marking",
                              **instance.to_json())
    return _create_result(False, error=f"{instance.name}: the two sides reach different markings",
                          left=left.to_json(), right=right.to_json(), **instance.to_json())
