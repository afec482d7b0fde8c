#!/usr/bin/env python3
"""
Corr CLI - Correlator Vectors
Correlators as vectors in block spaces: reference markings, elementary spheres, cut and sew

The closed formula lives on a reference marking of each component, the
chain marking that lists the boundary circles in the surface's own order.
Any other marking of the same surface is reached by transport along a move
path.

Version: 1.0.0
"""

from dataclasses import replace
from typing import List, Sequence, Tuple

from ..blocks.sewing import sewing_sequence
from ..blocks.space import BlockFunctor
from ..blocks.transport import transport
from ..category.objects import Morphism
from ..core.errors import InvalidSphereType
from ..scalars import Matrix
from ..surfaces.marking import FineMarking, Leaf, Vertex, boundary_leg, disjoint_union, is_cut, standard_marking
from ..surfaces.surface import IN, OUT, Boundary, Component, ExtendedSurface
from .system import CorrelatorSystem

MAX_SPHERE_HOLES = 3


# ============================================================================
# Reference Markings
# ============================================================================

def _split(comp: Component) -> Tuple[List[str], List[str]]:
    ins = [b.id for b in comp.boundary if b.orientation == IN]
    outs = [b.id for b in comp.boundary if b.orientation == OUT]
    return ins, outs


def _standard_union(surface: ExtendedSurface, ins_first: bool = False) -> FineMarking:
    marking = None
    for comp in surface.components:
        if ins_first:
            ins, outs = _split(comp)
            ids, eps = ins + outs, [IN] * len(ins) + [OUT] * len(outs)
        else:
            ids, eps = list(comp.ids()), [b.orientation for b in comp.boundary]
        piece = standard_marking(len(ids), eps, comp.genus, ids)
        marking = piece if marking is None else disjoint_union(marking, piece)
    return marking


def reference_marking(surface: ExtendedSurface) -> FineMarking:
    """Chain marking of every component, boundary circles in the surface's own order."""
    return replace(_standard_union(surface), surface=surface).validate()


def _sorted_words(surface: ExtendedSurface) -> List[Tuple[Leaf, ...]]:
    """Per component: incoming leaves, outgoing leaves, handles."""
    return _standard_union(surface, ins_first=True).words()


def _formula_word(comp: Component, sorted_word: Tuple[Leaf, ...]) -> Tuple[Leaf, ...]:
    """Outgoing leaves, then handles, then incoming leaves."""
    p, q = (len(side) for side in _split(comp))
    return sorted_word[p:p + q] + sorted_word[p + q:] + sorted_word[:p]


def reference_vector(S: CorrelatorSystem, bf: BlockFunctor, ref: FineMarking) -> Matrix:
    """
    Closed-formula correlator in Bl(ref), one v^g_{p|q} per component.

    The formula's word is rotated so the incoming leaves come first, and the
    boundary leaves are then braided into the order of ref.
    """
    C = S.category
    column = Matrix.identity(1, bf.order)
    actual = bf.space(ref).words
    for k, (comp, sorted_word) in enumerate(zip(ref.surface.components, _sorted_words(ref.surface))):
        p, q = (len(side) for side in _split(comp))
        local = Matrix.column(C.to_vector(S.vector(comp.genus, p, q)), bf.order)
        rotated = bf.transition(ref, _formula_word(comp, sorted_word), ref, sorted_word) @ local
        column = column.kron(bf.reorder(ref, sorted_word, actual[k]) @ rotated)
    return column


def correlator_vector(S: CorrelatorSystem, bf: BlockFunctor, M: FineMarking) -> Matrix:
    """
    Correlator of M's surface in Bl(M), transported from the reference marking.

    Raises:
        PreconditionViolated: no move path from the reference marking within the search limit
    """
    ref = reference_marking(M.surface)
    return transport(bf, ref, M) @ reference_vector(S, bf, ref)


# ============================================================================
# Elementary Spheres
# ============================================================================

def elementary_correlator(S: CorrelatorSystem, orientations: Sequence[int]) -> Morphism:
    """
    Correlator of a sphere with at most three holes, in leg order, from (omega, eps, Phi).

    omega is contracted with eps in its last slots down to the number of
    holes; Phi is applied at every incoming leg.

    Raises:
        InvalidSphereType: more than three holes
    """
    n = len(orientations)
    if n > MAX_SPHERE_HOLES:
        raise InvalidSphereType(f"Elementary spheres have at most {MAX_SPHERE_HOLES} holes, got {n}",
                                {"holes": n})
    C, A = S.category, S.A
    idF = C.identity(S.F)
    contracted = C.compose(C.tensor_all([idF] * n + [A.eps] * (MAX_SPHERE_HOLES - n)), A.omega)
    if not any(e == IN for e in orientations):
        return contracted
    return C.compose(C.tensor_all([A.Phi if e == IN else idF for e in orientations]), contracted)


def elementary_vector(S: CorrelatorSystem, bf: BlockFunctor, M: FineMarking) -> Matrix:
    """
    Elementary correlator on a cut-free marking whose components are single vertices.

    Raises:
        InvalidSphereType: a component has cuts or more than three holes
    """
    if M.cuts:
        raise InvalidSphereType("Elementary correlators need a marking without cuts")
    pieces = []
    for k, vertices in enumerate(M.component_vertices()):
        if len(vertices) != 1:
            raise InvalidSphereType(f"Component {k} is not a single sphere", {"component": k})
        legs = M.vertex(vertices[0]).legs
        pieces.append(elementary_correlator(S, [M.surface.orientation(leg[1]) for leg in legs]))
    return bf.vector(M, pieces)


# ============================================================================
# Cut and Sew
# ============================================================================

def cut_circle_id(cid: int, side: int) -> str:
    return f"c{cid}{'+' if side > 0 else '-'}"


def cut_apart(M: FineMarking) -> Tuple[FineMarking, List[Tuple[str, str]]]:
    """
    One sphere per vertex; every cut becomes an outgoing and an incoming circle.

    Returns the cut-apart marking and the (incoming, outgoing) pairs that
    sew it back, in cut order.
    """
    components, vertices = [], []
    for v in M.vertices:
        circles = []
        for leg in v.legs:
            if is_cut(leg):
                circles.append(Boundary(cut_circle_id(leg[1], leg[2]), OUT if leg[2] > 0 else IN))
            else:
                circles.append(Boundary(leg[1], M.surface.orientation(leg[1])))
        components.append(Component(0, tuple(circles)))
        vertices.append(Vertex(v.id, tuple(boundary_leg(b.id) for b in circles)))
    pieces = FineMarking(ExtendedSurface(tuple(components)), tuple(vertices)).validate()
    pairs = [(cut_circle_id(c.id, -1), cut_circle_id(c.id, 1)) for c in M.cuts]
    return pieces, pairs


def sewn_vector(S: CorrelatorSystem, bf: BlockFunctor, M: FineMarking) -> Tuple[Matrix, FineMarking]:
    """Elementary correlators on the pieces of M, sewn back together; returns the vector and the sewn marking."""
    pieces, pairs = cut_apart(M)
    matrix, path = sewing_sequence(bf, pieces, pairs)
    return matrix @ elementary_vector(S, bf, pieces), path[-1]
