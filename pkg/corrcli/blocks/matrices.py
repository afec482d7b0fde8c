#!/usr/bin/env python3
"""
Corr CLI - Move Matrices
Exact isomorphisms between block spaces assigned to elementary moves

Version: 1.0.0
"""

from typing import Callable, Dict, List, Sequence, Tuple

from ..coend.coend import slide_through_handle, twist_around_handle
from ..core.errors import InvalidLocation, PreconditionViolated
from ..core.logging_config import logger
from ..scalars import Matrix
from ..surfaces.marking import FineMarking
from ..surfaces.moves import Move, apply_move
from .space import BlockFunctor


def _component(M: FineMarking, mv: Move) -> int:
    if mv.vertex is not None:
        return M.component_of_vertex(mv.vertex)
    if mv.cut is not None:
        return M.component_of_vertex(M.cut_ends(mv.cut)[0][0])
    return mv.component if mv.component is not None else 0


def _words(bf: BlockFunctor, M: FineMarking, N: FineMarking, k: int):
    return bf.space(M).words[k], bf.space(N).words[k]


def _plain(bf: BlockFunctor, M: FineMarking, N: FineMarking, mv: Move, k: int) -> Matrix:
    """Moves that only reorder the word: Z, F, and A away from chords."""
    old, new = _words(bf, M, N, k)
    return bf.transition(M, old, N, new)


def _braid(bf: BlockFunctor, M: FineMarking, N: FineMarking, mv: Move, k: int) -> Matrix:
    if mv.cut is not None:
        return _handle_braid(bf, M, N, mv, k)
    C = bf.category
    v = M.vertex(mv.vertex)
    tr = M.traverse(k)
    pair = (1, 2) if len(v.legs) == 3 else (0, 1)
    for i in pair:
        if (v.id, i) in tr.straddles:
            raise PreconditionViolated(f"B at vertex {v.id} would pull apart the ends of cut "
                                       f"{tr.straddles[(v.id, i)][0]}", {"vertex": v.id})
    (s1, e1), (s2, e2) = tr.spans[(v.id, pair[0])], tr.spans[(v.id, pair[1])]
    leaves = tuple(tr.leaves)
    P, S1, S2, Q = leaves[:s1], leaves[s1:e1], leaves[s2:e2], leaves[e2:]
    X, Y = bf.word_object(M, S1), bf.word_object(M, S2)
    c = C.braiding_inv(Y, X) if mv.inverse else C.braiding(X, Y)
    local = C.on_invariants(C.whisker(bf.word_object(M, P), c, bf.word_object(M, Q)))
    swapped = P + S2 + S1 + Q
    _, new = _words(bf, M, N, k)
    return bf.transition(N, swapped, N, new) @ local


def _handle_braid(bf: BlockFunctor, M: FineMarking, N: FineMarking, mv: Move, k: int) -> Matrix:
    """Rotation of the handle vertex followed by the inverse antipode on its K (antipode for the inverse)."""
    old, new = _words(bf, M, N, k)
    rotate = bf.transition(M, old, N, new)
    if mv.inverse:
        return rotate @ bf.slot_operator(M, old, mv.cut, bf.coend.antipode)
    return bf.slot_operator(N, new, mv.cut, bf.coend.antipode_inv) @ rotate


def _modular(kind: str):
    def build(bf: BlockFunctor, M: FineMarking, N: FineMarking, mv: Move, k: int) -> Matrix:
        C = bf.category
        f = getattr(bf.coend, kind)
        if mv.inverse:
            f = C.inverse(f)
        old, _ = _words(bf, M, N, k)
        return bf.slot_operator(M, old, mv.cut, f)
    return build


def _span_into_handle(M: FineMarking, tr, edge: int, chord: int) -> Tuple[int, int]:
    """(start, K position) of the span behind edge, which stops at the outgoing end of chord."""
    for vid, i, _ in M.cut_ends(edge):
        if tr.straddles.get((vid, i)) == (chord, True):
            start, stop = tr.spans[(vid, i)]
            if stop < len(tr.leaves) and tr.leaves[stop] == ("K", chord):
                return start, stop
    raise PreconditionViolated(f"Cut {edge} must be read right up to the outgoing end of cut {chord}",
                               {"cut": edge, "chord": chord})


def _associate(bf: BlockFunctor, M: FineMarking, N: FineMarking, mv: Move, k: int) -> Matrix:
    """A at a chord carries the span of the closing cut through the handle, then the antipode on its K."""
    if M.cut(mv.cut).frame is None:
        return _plain(bf, M, N, mv, k)
    C = bf.category
    handle = next(cid for cid in M.parallel_cuts(mv.cut) if N.is_self_cut(cid))
    tr = M.traverse(k)
    start, stop = _span_into_handle(M, tr, handle, mv.cut)
    leaves = tuple(tr.leaves)
    P, U, Q = leaves[:start], leaves[start:stop], leaves[stop + 1:]
    slide = slide_through_handle(bf.coend, bf.word_object(M, U))
    local = C.on_invariants(C.whisker(bf.word_object(M, P), slide, bf.word_object(M, Q)))
    slid = P + (("K", handle),) + U + Q
    _, new = _words(bf, M, N, k)
    return bf.transition(N, slid, N, new) @ bf.slot_operator(N, slid, handle, bf.coend.antipode) @ local


def _twist(bf: BlockFunctor, M: FineMarking, N: FineMarking, mv: Move, k: int) -> Matrix:
    """T at a framed cut acts on its K; at a cut parallel to a chord it twists the span ending in that K."""
    if M.cut(mv.cut).frame is not None:
        return _modular("T")(bf, M, N, mv, k)
    C = bf.category
    chord = next(cid for cid in M.parallel_cuts(mv.cut) if M.cut(cid).frame is not None)
    tr = M.traverse(k)
    start, stop = _span_into_handle(M, tr, mv.cut, chord)
    leaves = tuple(tr.leaves)
    P, U, Q = leaves[:start], leaves[start:stop], leaves[stop + 1:]
    f = twist_around_handle(bf.coend, bf.word_object(M, U), inverse=mv.inverse)
    return C.on_invariants(C.whisker(bf.word_object(M, P), f, bf.word_object(M, Q)))


def _central(bf: BlockFunctor, M: FineMarking, N: FineMarking, mv: Move, k: int) -> Matrix:
    zeta = bf.coend.zeta
    factor = zeta.inverse() if mv.inverse else zeta
    g = M.surface.components[k].genus
    n = bf.category.invariants_dim(bf.space(M).objects[k])
    return Matrix.identity(n, bf.order).scale(factor ** g)


_BUILDERS: Dict[str, Callable[..., Matrix]] = {
    "Z": _plain,
    "F": _plain,
    "A": _associate,
    "B": _braid,
    "S": _modular("S"),
    "T": _twist,
    "C": _central,
}


def move_matrix(bf: BlockFunctor, M: FineMarking, mv: Move) -> Tuple[Matrix, FineMarking]:
    """
    Matrix Bl(M) -> Bl(apply_move(M, mv)) and the target marking.

    Raises:
        InvalidLocation: mv does not act on M
    """
    N = apply_move(M, mv)
    k = _component(M, mv)
    if not 0 <= k < len(M.surface.components):
        raise InvalidLocation(f"Move {mv} names no component of the marking")
    local = _BUILDERS[mv.kind](bf, M, N, mv, k)
    matrix = bf.on_component(bf.space(M), k, local)
    logger.debug(f"matrix of {mv}: {matrix.rows}x{matrix.cols}")
    return matrix, N


def word_matrix(bf: BlockFunctor, M: FineMarking, word: Sequence[Move]) -> Tuple[Matrix, List[FineMarking]]:
    """Product of the move matrices along the word (moves in application order)."""
    result = Matrix.identity(bf.dim(M), bf.order)
    path = [M]
    for mv in word:
        step, nxt = move_matrix(bf, path[-1], mv)
        result = step @ result
        path.append(nxt)
    return result, path
