#!/usr/bin/env python3
"""
Corr CLI - Sewing Maps
Linear maps between block spaces induced by sewing boundary circles

Version: 1.0.0
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from ..category.objects import Morphism, ObjectExpr
from ..core.logging_config import logger
from ..scalars import Matrix
from ..surfaces.marking import FineMarking, Leaf
from ..surfaces.moves import Move
from ..surfaces.sewing import sew_marking, sewing_preparation
from .matrices import word_matrix
from .space import BlockFunctor, BlockSpace, kron_indices


@dataclass(frozen=True)
class SewingMap:
    source: BlockSpace
    target: BlockSpace
    cut: int
    matrix: Matrix
    self_sewing: bool
    j_eps: str
    gathering: Tuple[Move, ...] = ()

    def to_json(self) -> Dict[str, Any]:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "cut": self.cut,
            "self_sewing": self.self_sewing,
            "j_eps": self.j_eps,
            "gathering": [str(mv) for mv in self.gathering],
            "matrix": self.matrix.to_json(),
        }


def _rotated(word: Tuple[Leaf, ...], leaf: Leaf, last: bool) -> Tuple[Leaf, ...]:
    i = word.index(leaf)
    return word[i + 1:] + word[:i + 1] if last else word[i:] + word[:i]


def _pair_rotation(word: Tuple[Leaf, ...], alpha: Leaf, beta: Leaf) -> Tuple[Leaf, ...]:
    """Rotation of word ending with the cyclically adjacent pair {alpha, beta}."""
    n = len(word)
    for k in range(n):
        rotated = word[k:] + word[:k]
        if set(rotated[-2:]) == {alpha, beta}:
            return rotated
    raise ValueError("sewn circles are not adjacent in the block word")


def _two_components(bf: BlockFunctor, M: FineMarking, N: FineMarking, alpha: str, beta: str) -> Matrix:
    """(id (x) ev'_F (x) id) o (phi_beta (x) phi_alpha), as a matrix on the two factors."""
    C = bf.category
    space = bf.space(M)
    kb, ka = M.surface.component_index(beta), M.surface.component_index(alpha)
    a_leaf, b_leaf = ("b", alpha), ("b", beta)
    w1 = _rotated(space.words[kb], b_leaf, last=True)
    w2 = _rotated(space.words[ka], a_leaf, last=False)
    r1 = bf.transition(M, space.words[kb], M, w1)
    r2 = bf.transition(M, space.words[ka], M, w2)
    V, U = bf.word_object(M, w1[:-1]), bf.word_object(M, w2[1:])
    contract = C.whisker(V, C.ev_tilde(bf.F), U)
    pair = bf.tensor_embedding(bf.word_object(M, w1), bf.word_object(M, w2))
    merged = w1[:-1] + w2[1:]
    k_new = _merged_index(M, alpha, beta)
    to_target = bf.transition(N, merged, N, bf.space(N).words[k_new])
    return to_target @ C.on_invariants(contract) @ pair @ r1.kron(r2)


def _merged_index(M: FineMarking, alpha: str, beta: str) -> int:
    return min(M.surface.component_index(alpha), M.surface.component_index(beta))


def _self_sewing(bf: BlockFunctor, M: FineMarking, N: FineMarking, alpha: str, beta: str, cid: int) -> Matrix:
    """Post-composition with i_F (or i_{F^v} o (id (x) pi_F)) on the adjacent pair."""
    C = bf.category
    k = M.surface.component_index(alpha)
    word = bf.space(M).words[k]
    rotated = _pair_rotation(word, ("b", alpha), ("b", beta))
    V = bf.word_object(M, rotated[:-2])
    if rotated[-2] == ("b", beta):
        glue: Morphism = C.coend_inclusion(bf.F)
    else:
        Fv = bf.F.dual()
        glue = C.compose(C.coend_inclusion(Fv), C.tensor(C.identity(Fv), C.pivot(bf.F)))
    local = C.on_invariants(C.whisker(V, glue, ObjectExpr.unit()))
    leaves = rotated[:-2] + (("K", cid),)
    to_target = bf.transition(N, leaves, N, bf.space(N).words[k])
    return to_target @ local @ bf.transition(M, word, M, rotated)


def sew_map(bf: BlockFunctor, M: FineMarking, alpha: str, beta: str) -> SewingMap:
    """
    Linear map Bl(M) -> Bl(M') for the sewing of alpha (incoming) to beta (outgoing).

    Circles on different vertices of one component are first gathered by the
    moves of sewing_preparation; their matrix precedes the sewing.

    Raises:
        OrientationMismatch, UnknownBoundary, PreconditionViolated: as sew_marking
    """
    N, cid = sew_marking(M, alpha, beta)
    gathering = sewing_preparation(M, alpha, beta)
    before, path = word_matrix(bf, M, gathering)
    moved = path[-1]
    source, target = bf.space(moved), bf.space(N)
    ka, kb = M.surface.component_index(alpha), M.surface.component_index(beta)
    if ka == kb:
        local = _self_sewing(bf, moved, N, alpha, beta, cid)
        matrix = bf.on_component(source, ka, local)
        rotated = _pair_rotation(source.words[ka], ("b", alpha), ("b", beta))
        j_eps = "id" if rotated[-2] == ("b", beta) else "pi_F"
    else:
        local = _two_components(bf, M, N, alpha, beta)
        matrix = _embed_pair(source, target, kb, ka, local)
        j_eps = "id"
    logger.info(f"sewing {alpha} -> {beta}: {bf.dim(M)} -> {target.dim}")
    return SewingMap(bf.space(M), target, cid, matrix @ before, ka == kb, j_eps, tuple(gathering))


def _embed_pair(source: BlockSpace, target: BlockSpace, first: int, second: int, local: Matrix) -> Matrix:
    """
    Extends local: V_first (x) V_second -> V_merged by identities on the other factors.

    The merged factor sits at min(first, second) in the target; the other one is dropped.
    """
    dims = source.dims
    merged_at, dropped = min(first, second), max(first, second)
    target_dims = target.dims
    target_index = {idx: n for n, idx in enumerate(kron_indices(target_dims))}
    entries = {}
    for col, idx in enumerate(kron_indices(dims)):
        local_col = idx[first] * dims[second] + idx[second]
        rest = [i for k, i in enumerate(idx) if k != dropped]
        for r in range(local.rows):
            value = local.entries.get((r, local_col))
            if value is None:
                continue
            rest[merged_at] = r
            row = target_index[tuple(rest)]
            entries[(row, col)] = value
    return Matrix(target.dim, source.dim, entries, local.order)


def sewing_sequence(bf: BlockFunctor, M: FineMarking, pairs: Sequence[Tuple[str, str]]) -> Tuple[Matrix, List[FineMarking]]:
    """Composite of several sewings, applied in order."""
    result = Matrix.identity(bf.dim(M), bf.order)
    path = [M]
    for alpha, beta in pairs:
        step = sew_map(bf, path[-1], alpha, beta)
        result = step.matrix @ result
        path.append(step.target.marking)
    return result, path
