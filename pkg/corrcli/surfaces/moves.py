#!/usr/bin/env python3
"""
Corr CLI - Elementary Moves
Z, B, F, A, S, T and C moves as rewrites of fine markings

Version: 1.0.0
"""

from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..core.errors import CorrError, DataFormatError, InvalidLocation, PreconditionViolated
from ..core.logging_config import logger
from .marking import Cut, FineMarking, Frame, Leg, Vertex, cut_leg, is_cut

MOVE_KINDS = ("Z", "B", "F", "A", "S", "T", "C")


@dataclass(frozen=True)
class Move:
    """
    One elementary move and where it acts.

    Z and B act on a vertex (B also on a handle cut), F on a cut (its
    inverse splits a vertex before leg `split`), A, S and T on a cut, C on a
    surface component.
    """
    kind: str
    vertex: Optional[int] = None
    cut: Optional[int] = None
    component: Optional[int] = None
    split: Optional[int] = None
    side: int = 1
    inverse: bool = False

    def __post_init__(self):
        if self.kind not in MOVE_KINDS:
            raise DataFormatError(f"Unknown move kind '{self.kind}'", {"kind": self.kind})

    @classmethod
    def z(cls, vertex: int, inverse: bool = False) -> "Move":
        return cls("Z", vertex=vertex, inverse=inverse)

    @classmethod
    def b(cls, vertex: int, inverse: bool = False) -> "Move":
        return cls("B", vertex=vertex, inverse=inverse)

    @classmethod
    def b_cut(cls, cut: int, inverse: bool = False) -> "Move":
        return cls("B", cut=cut, inverse=inverse)

    @classmethod
    def f(cls, cut: int) -> "Move":
        return cls("F", cut=cut)

    @classmethod
    def f_split(cls, vertex: int, split: int, side: int = 1) -> "Move":
        return cls("F", vertex=vertex, split=split, side=side, inverse=True)

    @classmethod
    def a(cls, cut: int) -> "Move":
        return cls("A", cut=cut)

    @classmethod
    def s(cls, cut: int, inverse: bool = False) -> "Move":
        return cls("S", cut=cut, inverse=inverse)

    @classmethod
    def t(cls, cut: int, inverse: bool = False) -> "Move":
        return cls("T", cut=cut, inverse=inverse)

    @classmethod
    def c(cls, component: int = 0, inverse: bool = False) -> "Move":
        return cls("C", component=component, inverse=inverse)

    def inverted(self) -> "Move":
        if self.kind in ("F", "A"):
            raise PreconditionViolated(f"The inverse of {self} depends on the marking; use inverse_move")
        return replace(self, inverse=not self.inverse)

    def __str__(self) -> str:
        name = self.kind + ("^-1" if self.inverse else "")
        if self.split is not None:
            return f"{name}(v{self.vertex}@{self.split})"
        if self.vertex is not None:
            return f"{name}(v{self.vertex})"
        if self.cut is not None:
            return f"{name}(c{self.cut})"
        return f"{name}(k{self.component})"

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind}
        for key in ("vertex", "cut", "component", "split"):
            value = getattr(self, key)
            if value is not None:
                data[key] = value
        if self.split is not None:
            data["side"] = self.side
        if self.inverse:
            data["inverse"] = True
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Move":
        try:
            return cls(
                str(data["kind"]),
                vertex=data.get("vertex"),
                cut=data.get("cut"),
                component=data.get("component"),
                split=data.get("split"),
                side=int(data.get("side", 1)),
                inverse=bool(data.get("inverse", False)),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise DataFormatError(f"Malformed move: {e}") from e


# ============================================================================
# Helpers
# ============================================================================

def _entry(M: FineMarking, vid: int) -> Optional[int]:
    tr = M.traverse(M.component_of_vertex(vid))
    return tr.entries[vid]


def _same_cut(a: Leg, b: Leg) -> bool:
    return is_cut(a) and is_cut(b) and a[1] == b[1]


def _handle(M: FineMarking, cid: Optional[int]) -> Tuple[Vertex, Cut]:
    if cid is None or not M.is_self_cut(cid):
        raise InvalidLocation(f"Cut {cid} is not a handle cut", {"cut": cid})
    vid = M.cut_ends(cid)[0][0]
    return M.vertex(vid), M.cut(cid)


def _frame_times(frame: Frame, m: Tuple[int, int, int, int]) -> Frame:
    """frame . m for 2x2 matrices stored row-major."""
    a, b, c, d = frame
    p, q, r, s = m
    return (a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s)


S_FRAME = (0, -1, 1, 0)
S_FRAME_INV = (0, 1, -1, 0)
T_FRAME = (1, 1, 0, 1)
T_FRAME_INV = (1, -1, 0, 1)
MINUS_ONE = (-1, 0, 0, -1)


def _rotate(legs: Tuple[Leg, ...], right: bool) -> Tuple[Leg, ...]:
    if not legs:
        return legs
    return legs[-1:] + legs[:-1] if right else legs[1:] + legs[:1]


# ============================================================================
# Rewrites
# ============================================================================

def _apply_z(M: FineMarking, mv: Move) -> FineMarking:
    v = M.vertex(mv.vertex)
    if not v.legs:
        raise InvalidLocation(f"Vertex {v.id} has no legs to rotate", {"vertex": v.id})
    return M.replace_vertex(Vertex(v.id, _rotate(v.legs, right=mv.inverse)))


def _apply_b(M: FineMarking, mv: Move) -> FineMarking:
    if mv.cut is not None:
        v, cut = _handle(M, mv.cut)
        if len(v.legs) != 3:
            raise InvalidLocation(f"B at cut {cut.id} needs a handle with one further leg", {"cut": cut.id})
        rotated = M.replace_vertex(Vertex(v.id, _rotate(v.legs, right=not mv.inverse)))
        return rotated.replace_frame(cut.id, _frame_times(cut.frame, MINUS_ONE))

    v = M.vertex(mv.vertex)
    entry = _entry(M, v.id)
    if len(v.legs) == 3:
        if entry not in (None, 0):
            raise PreconditionViolated(f"B at vertex {v.id} needs its entry leg distinguished",
                                       {"vertex": v.id, "entry": entry})
        l0, l1, l2 = v.legs
        if _same_cut(l1, l2):
            raise PreconditionViolated(f"B at vertex {v.id} would swap the two ends of a handle cut")
        return M.replace_vertex(Vertex(v.id, (l0, l2, l1)))
    if len(v.legs) == 2:
        if entry is not None:
            raise PreconditionViolated(f"B on the cylinder vertex {v.id} needs the root vertex")
        l0, l1 = v.legs
        if _same_cut(l0, l1):
            raise PreconditionViolated(f"B at vertex {v.id} would swap the two ends of a handle cut")
        return M.replace_vertex(Vertex(v.id, (l1, l0)))
    raise InvalidLocation(f"B needs a vertex with two or three legs, vertex {v.id} has {len(v.legs)}")


def _f_roles(M: FineMarking, cid: int) -> Tuple[Vertex, Vertex]:
    """(P, Q) with the cut last on P and first on Q."""
    ends = M.cut_ends(cid)
    if ends[0][0] == ends[1][0]:
        raise InvalidLocation(f"F cannot contract the handle cut {cid}", {"cut": cid})
    for (pv, pi, _), (qv, qi, _) in (ends, ends[::-1]):
        P, Q = M.vertex(pv), M.vertex(qv)
        if pi == len(P.legs) - 1 and qi == 0:
            return P, Q
    raise PreconditionViolated(
        f"F at cut {cid}: the cut must be the last leg on one side and the distinguished leg on the other",
        {"cut": cid},
    )


def _apply_f(M: FineMarking, mv: Move) -> FineMarking:
    if mv.inverse:
        return _apply_f_split(M, mv)
    P, Q = _f_roles(M, mv.cut)
    legs = P.legs[:-1] + Q.legs[1:]
    if len(legs) > 3:
        raise PreconditionViolated(f"F at cut {mv.cut} would create a vertex with {len(legs)} legs",
                                   {"cut": mv.cut})
    vertices = [Vertex(P.id, legs) if v.id == P.id else v for v in M.vertices if v.id != Q.id]
    return M.with_vertices(vertices, [c for c in M.cuts if c.id != mv.cut])


def _apply_f_split(M: FineMarking, mv: Move) -> FineMarking:
    v = M.vertex(mv.vertex)
    k = mv.split
    if k is None or not 1 <= k <= len(v.legs):
        raise InvalidLocation(f"Cannot split vertex {v.id} before leg {k}", {"vertex": v.id})
    head, tail = v.legs[:k], v.legs[k:]
    if len(head) + 1 > 3 or len(tail) + 1 > 3:
        raise PreconditionViolated(f"Splitting vertex {v.id} at {k} leaves a piece with four legs")
    for leg in head:
        if is_cut(leg) and any(_same_cut(leg, other) for other in tail):
            raise PreconditionViolated(f"Splitting vertex {v.id} at {k} separates the ends of a handle cut")
    cid, new_vid = M.next_cut_id(), M.next_vertex_id()
    P = Vertex(v.id, head + (cut_leg(cid, mv.side),))
    Q = Vertex(new_vid, (cut_leg(cid, -mv.side),) + tail)
    vertices = [P if w.id == v.id else w for w in M.vertices] + [Q]
    return M.with_vertices(vertices, list(M.cuts) + [Cut(cid)])


def _apply_a(M: FineMarking, mv: Move) -> FineMarking:
    """
    Re-cuts the 4-holed sphere formed by the two pants at a cut.

    Q is the pants on which the cut is distinguished. With the cut in the
    middle of P, (p0, c, p2 | c, q1, q2) becomes (p0, q1, d | d, q2, p2); with
    the cut last on P, (x0, x1, c | c, y1, y2) becomes (x0, d, y2 | d, x1, y1).
    The two rewrites are mutually inverse. At a chord the parallel cut that
    closes into a handle takes over the chord's frame times -1.
    """
    ends = M.cut_ends(mv.cut)
    if ends[0][0] == ends[1][0]:
        raise InvalidLocation(f"A cannot act on the handle cut {mv.cut}", {"cut": mv.cut})
    roles = [(p, q) for p, q in (ends, ends[::-1]) if q[1] == 0 and p[1] in (1, 2)]
    if not roles:
        raise PreconditionViolated(f"A at cut {mv.cut} needs the cut distinguished on one of the two pants",
                                   {"cut": mv.cut})
    (pv, pi, side), (qv, _, _) = roles[0]
    P, Q = M.vertex(pv), M.vertex(qv)
    if len(P.legs) != 3 or len(Q.legs) != 3:
        raise PreconditionViolated(f"A at cut {mv.cut} needs two pants with three legs each")
    d = M.next_cut_id()
    plus, minus = cut_leg(d, side), cut_leg(d, -side)
    _, q1, q2 = Q.legs
    if pi == 1:
        p0, _, p2 = P.legs
        new_p, new_q = (p0, q1, plus), (minus, q2, p2)
    else:
        x0, x1, _ = P.legs
        new_p, new_q = (x0, plus, q2), (minus, x1, q1)
    vertices = [Vertex(P.id, new_p) if v.id == P.id else Vertex(Q.id, new_q) if v.id == Q.id else v
                for v in M.vertices]
    cuts = [c for c in M.cuts if c.id != mv.cut] + [Cut(d)]
    chord = M.cut(mv.cut)
    if chord.frame is None:
        return M.with_vertices(vertices, cuts)
    return _hand_over_frame(M, mv.cut, chord.frame, vertices, cuts)


def _hand_over_frame(M: FineMarking, cid: int, frame: Frame, vertices: List[Vertex],
                     cuts: List[Cut]) -> FineMarking:
    """After A at the chord cid a parallel cut closes on one vertex; it becomes the handle, frame times -1."""
    for partner in M.parallel_cuts(cid):
        owners = {v.id for v in vertices if any(is_cut(leg) and leg[1] == partner for leg in v.legs)}
        if len(owners) == 1:
            handed = [Cut(c.id, _frame_times(frame, MINUS_ONE)) if c.id == partner else c for c in cuts]
            return M.with_vertices(vertices, handed)
    raise PreconditionViolated(f"A at the cycle cut {cid} must close a parallel cut into a handle",
                               {"cut": cid})


def _apply_s(M: FineMarking, mv: Move) -> FineMarking:
    _, cut = _handle(M, mv.cut)
    return M.replace_frame(cut.id, _frame_times(cut.frame, S_FRAME_INV if mv.inverse else S_FRAME))


def _twisted_frame(M: FineMarking, cid: Optional[int]) -> Cut:
    """The cut whose frame a twist at cid changes: cid itself, or the one framed cut parallel to it."""
    if cid is None:
        raise InvalidLocation("T needs a cut")
    cut = M.cut(cid)
    if cut.frame is not None:
        return cut
    framed = [p for p in M.parallel_cuts(cid) if M.cut(p).frame is not None]
    if len(framed) != 1:
        raise InvalidLocation(f"T at cut {cid} needs a framed cut or a cut parallel to one", {"cut": cid})
    return M.cut(framed[0])


def _apply_t(M: FineMarking, mv: Move) -> FineMarking:
    cut = _twisted_frame(M, mv.cut)
    return M.replace_frame(cut.id, _frame_times(cut.frame, T_FRAME_INV if mv.inverse else T_FRAME))


def _apply_c(M: FineMarking, mv: Move) -> FineMarking:
    k = mv.component if mv.component is not None else 0
    if not 0 <= k < len(M.surface.components):
        raise InvalidLocation(f"No component {k}", {"component": k})
    return replace(M, central=M.central + (-1 if mv.inverse else 1))


_HANDLERS: Dict[str, Callable[[FineMarking, Move], FineMarking]] = {
    "Z": _apply_z,
    "B": _apply_b,
    "F": _apply_f,
    "A": _apply_a,
    "S": _apply_s,
    "T": _apply_t,
    "C": _apply_c,
}


def apply_move(M: FineMarking, mv: Move) -> FineMarking:
    """
    Rewrites M by one move.

    Raises:
        InvalidLocation: the location does not exist or has the wrong shape
        PreconditionViolated: an edge condition of the move fails
    """
    result = _HANDLERS[mv.kind](M, mv).validate()
    logger.debug(f"move {mv}: {len(M.vertices)} -> {len(result.vertices)} vertices")
    return result


def apply_word(M: FineMarking, word: Sequence[Move]) -> List[FineMarking]:
    """All markings along the word, starting with M."""
    path = [M]
    for mv in word:
        path.append(apply_move(path[-1], mv))
    return path


def inverse_move(M: FineMarking, mv: Move) -> Move:
    """The move undoing mv applied at M (up to renumbering)."""
    if mv.kind == "A":
        return Move.a(M.next_cut_id())
    if mv.kind == "F" and not mv.inverse:
        P, _ = _f_roles(M, mv.cut)
        side = P.legs[-1][2]
        return Move.f_split(P.id, len(P.legs) - 1, side)
    if mv.kind == "F":
        return Move.f(M.next_cut_id())
    return mv.inverted()


# ============================================================================
# Admissibility and Neighbours
# ============================================================================

def _orientations(M: FineMarking, leaves) -> List[int]:
    return [M.surface.orientation(ident) if kind == "b" else 0 for kind, ident in leaves]


def _swapped_spans(M: FineMarking, mv: Move):
    v = M.vertex(mv.vertex)
    tr = M.traverse(M.component_of_vertex(v.id))
    pair = (1, 2) if len(v.legs) == 3 else (0, 1)
    return [tr.leaves[slice(*tr.spans[(v.id, i)])] for i in pair]


def is_admissible(word: Sequence[Move], M: FineMarking) -> bool:
    """
    True iff the word maps incoming circles to incoming and outgoing to outgoing.

    Only B moves between vertices permute boundary circles; they do so block
    by block, so the two exchanged blocks must carry the same orientations.
    """
    current = M
    for mv in word:
        if mv.kind == "B" and mv.cut is None:
            first, second = _swapped_spans(current, mv)
            if _orientations(current, first) != _orientations(current, second):
                return False
        current = apply_move(current, mv)
    return True


def candidate_moves(M: FineMarking, kinds: Sequence[str] = ("Z", "F", "A")) -> List[Move]:
    """Moves that apply at M, restricted to the given kinds; used by graph searches."""
    out: List[Move] = []
    if "Z" in kinds:
        for v in M.vertices:
            if len(v.legs) > 1:
                out.extend([Move.z(v.id), Move.z(v.id, inverse=True)])
    if "B" in kinds:
        out.extend(Move.b(v.id) for v in M.vertices if len(v.legs) in (2, 3))
    for c in M.cuts:
        if M.is_self_cut(c.id):
            continue
        if "F" in kinds:
            out.append(Move.f(c.id))
        if "A" in kinds:
            out.append(Move.a(c.id))
    applicable = []
    for mv in out:
        try:
            apply_move(M, mv)
        except CorrError:
            continue
        applicable.append(mv)
    return applicable
