#!/usr/bin/env python3
"""
Corr CLI - Block Spaces
The pinned block functor on fine markings

The space of a connected component is Hom(1, W), where W is the traversal
word of the marking: every boundary circle contributes F (outgoing) or F^v
(incoming) and every handle cut contributes one K. Disjoint unions give
tensor products, ordered by the surface's components.

Version: 1.0.0
"""

import itertools
import threading
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from ..category.base import RibbonCategory
from ..category.objects import Morphism, ObjectExpr, tensor_all
from ..coend.coend import CoendK
from ..core.errors import ShapeMismatch
from ..core.logging_config import logger
from ..scalars import Matrix, stack_columns
from ..surfaces.marking import FineMarking, Leaf
from ..surfaces.surface import OUT


@dataclass(frozen=True)
class BlockSpace:
    marking: FineMarking
    F: ObjectExpr
    words: Tuple[Tuple[Leaf, ...], ...]
    objects: Tuple[ObjectExpr, ...]
    dims: Tuple[int, ...]

    @property
    def dim(self) -> int:
        total = 1
        for d in self.dims:
            total *= d
        return total

    def genus(self) -> List[int]:
        return [c.genus for c in self.marking.surface.components]

    def signs(self) -> Dict[str, int]:
        return {b.id: b.orientation for c in self.marking.surface.components for b in c.boundary}

    def to_json(self) -> Dict[str, Any]:
        return {
            "F": str(self.F),
            "dim": self.dim,
            "components": [
                {"word": [f"{kind}:{ident}" for kind, ident in w], "object": str(obj), "dim": d}
                for w, obj, d in zip(self.words, self.objects, self.dims)
            ],
            "genus": self.genus(),
            "signs": self.signs(),
        }


class BlockFunctor:
    """
    Block spaces and linear maps for one category, coend and bulk object F.

    Spaces are memoized per marking; the cache is shared between worker
    threads, so writes go through a lock.
    """

    def __init__(self, coend: CoendK, F: ObjectExpr):
        self.coend = coend
        self.category: RibbonCategory = coend.category
        self.F = F
        self._spaces: Dict[FineMarking, BlockSpace] = {}
        self._lock = threading.Lock()

    @property
    def order(self) -> int:
        return self.category.order

    # ======================================================================
    # Words
    # ======================================================================

    def leaf_object(self, M: FineMarking, leaf: Leaf) -> ObjectExpr:
        kind, ident = leaf
        if kind == "K":
            return self.coend.K
        return self.F if M.surface.orientation(ident) == OUT else self.F.dual()

    def word_object(self, M: FineMarking, leaves: Sequence[Leaf]) -> ObjectExpr:
        return tensor_all(self.leaf_object(M, leaf) for leaf in leaves)

    # ======================================================================
    # Spaces
    # ======================================================================

    def space(self, M: FineMarking) -> BlockSpace:
        cached = self._spaces.get(M)
        if cached is not None:
            return cached
        words = tuple(M.words())
        objects = tuple(self.word_object(M, w) for w in words)
        dims = tuple(self.category.invariants_dim(W) for W in objects)
        space = BlockSpace(M, self.F, words, objects, dims)
        with self._lock:
            self._spaces.setdefault(M, space)
        logger.debug(f"block space {[str(o) for o in objects]}: dims {dims}")
        return space

    def dim(self, M: FineMarking) -> int:
        return self.space(M).dim

    # ======================================================================
    # Vectors
    # ======================================================================

    def vector(self, M: FineMarking, pieces: Sequence[Morphism]) -> Matrix:
        """Column of the tensor product of one morphism 1 -> W_k per component."""
        space = self.space(M)
        if len(pieces) != len(space.objects):
            raise ShapeMismatch(f"Need {len(space.objects)} component vectors, got {len(pieces)}")
        column = Matrix.identity(1, self.order)
        for piece, W in zip(pieces, space.objects):
            if piece.cod != W or not piece.dom.is_unit():
                raise ShapeMismatch(f"Component vector {piece.describe()} does not land in {W}")
            column = column.kron(Matrix.column(self.category.to_vector(piece), self.order))
        return column

    def tensor_embedding(self, X: ObjectExpr, Y: ObjectExpr) -> Matrix:
        """Hom(1, X) (x) Hom(1, Y) -> Hom(1, X (x) Y), phi (x) psi -> phi (x) psi."""
        C = self.category
        dx, dy = C.invariants_dim(X), C.invariants_dim(Y)
        columns = []
        for i, j in itertools.product(range(dx), range(dy)):
            phi = C.from_vector(X, [1 if n == i else 0 for n in range(dx)])
            psi = C.from_vector(Y, [1 if n == j else 0 for n in range(dy)])
            columns.append(C.to_vector(C.tensor(phi, psi)))
        return stack_columns(columns, C.invariants_dim(X @ Y), self.order)

    def on_component(self, space: BlockSpace, k: int, local: Matrix) -> Matrix:
        """local acting on component k, identity elsewhere."""
        before = Matrix.identity(_product(space.dims[:k]), self.order)
        after = Matrix.identity(_product(space.dims[k + 1:]), self.order)
        return before.kron(local).kron(after)

    # ======================================================================
    # Word Transitions
    # ======================================================================

    def rotation(self, A: ObjectExpr, B: ObjectExpr) -> Morphism:
        """(id_B (x) theta_A) o c_{A,B}: A (x) B -> B (x) A."""
        C = self.category
        return C.compose(C.whisker(B, C.twist(A), ObjectExpr.unit()), C.braiding(A, B))

    def transition(self, M_old: FineMarking, old: Sequence[Leaf],
                   M_new: FineMarking, new: Sequence[Leaf]) -> Matrix:
        """
        Identification Hom(1, W(old)) -> Hom(1, W(new)) for words that agree up to rotation.

        Raises:
            ShapeMismatch: the two leaf sequences are not cyclic rotations of each other
        """
        old, new = tuple(old), tuple(new)
        n = self.category.invariants_dim(self.word_object(M_old, old))
        if old == new:
            return Matrix.identity(n, self.order)
        for k in range(1, len(old)):
            if old[k:] + old[:k] == new:
                A, B = self.word_object(M_old, old[:k]), self.word_object(M_old, old[k:])
                return self.category.on_invariants(self.rotation(A, B))
        raise ShapeMismatch("Block words are not related by a rotation",
                            {"old": [str(x) for x in old], "new": [str(x) for x in new]})

    def reorder(self, M: FineMarking, old: Sequence[Leaf], new: Sequence[Leaf]) -> Matrix:
        """
        Hom(1, W(old)) -> Hom(1, W(new)) for a permutation of the leaves.

        Leaves are moved left one exchange at a time, each exchange being the
        braiding c_{X,Y} of a B move on two adjacent leaves.

        Raises:
            ShapeMismatch: new is not a permutation of old
        """
        current, target = list(old), tuple(new)
        if Counter(current) != Counter(target):
            raise ShapeMismatch("Block words are not related by a permutation",
                                {"old": [str(x) for x in current], "new": [str(x) for x in target]})
        C = self.category
        result = Matrix.identity(C.invariants_dim(self.word_object(M, current)), self.order)
        for pos, leaf in enumerate(target):
            i = current.index(leaf, pos)
            while i > pos:
                X, Y = self.leaf_object(M, current[i - 1]), self.leaf_object(M, current[i])
                P, Q = self.word_object(M, current[:i - 1]), self.word_object(M, current[i + 1:])
                result = C.on_invariants(C.whisker(P, C.braiding(X, Y), Q)) @ result
                current[i - 1], current[i] = current[i], current[i - 1]
                i -= 1
        return result

    def slot_operator(self, M: FineMarking, leaves: Sequence[Leaf], cid: int, f: Morphism) -> Matrix:
        """f: K -> K applied at the K leaf of cut cid."""
        leaves = tuple(leaves)
        i = leaves.index(("K", cid))
        left = self.word_object(M, leaves[:i])
        right = self.word_object(M, leaves[i + 1:])
        return self.category.on_invariants(self.category.whisker(left, f, right))


def _product(values: Sequence[int]) -> int:
    total = 1
    for v in values:
        total *= v
    return total


def kron_indices(dims: Sequence[int]) -> List[Tuple[int, ...]]:
    """Multi-indices of a tensor product basis in kron order."""
    return list(itertools.product(*[range(d) for d in dims]))
