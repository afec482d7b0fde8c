#!/usr/bin/env python3
"""
Corr CLI - Sewing Markings
Identifies an incoming with an outgoing boundary circle

Version: 1.0.0
"""

from typing import List, Optional, Tuple

from ..core.errors import OrientationMismatch
from ..core.logging_config import logger
from .marking import (
    IDENTITY_FRAME,
    Cut,
    FineMarking,
    Vertex,
    boundary_leg,
    cut_leg,
    disjoint_union,
    standard_marking,
)
from .moves import Move, apply_word
from .search import gathering_word
from .surface import IN, OUT, Component, ExtendedSurface


def _sewn_surface(S: ExtendedSurface, alpha: str, beta: str) -> ExtendedSurface:
    ka, kb = S.component_index(alpha), S.component_index(beta)
    if ka == kb:
        comp = S.components[ka]
        return S.with_component(ka, Component(comp.genus + 1, comp.without(alpha, beta)))
    first, second = sorted((ka, kb))
    a, b = S.components[first], S.components[second]
    merged = Component(a.genus + b.genus, a.without(alpha, beta) + b.without(alpha, beta))
    comps = list(S.components)
    comps[first] = merged
    del comps[second]
    return ExtendedSurface(tuple(comps))


def sew_marking(M: FineMarking, alpha: str, beta: str) -> Tuple[FineMarking, int]:
    """
    Sews the incoming circle alpha to the outgoing circle beta.

    The beta leg becomes the outgoing end of a new cut and the alpha leg its
    incoming end. Sewing two circles of one vertex creates a handle cut with
    the identity frame; two circles on different vertices of one component
    are first brought onto a common vertex by gathering_word. Returns the
    sewn marking and the new cut id.

    Raises:
        UnknownBoundary: alpha or beta is not a boundary circle
        OrientationMismatch: alpha is not incoming or beta is not outgoing
        PreconditionViolated: the two circles cannot be gathered within the search limit
    """
    S = M.surface
    if S.orientation(alpha) != IN or S.orientation(beta) != OUT:
        raise OrientationMismatch(
            f"Sewing needs '{alpha}' incoming and '{beta}' outgoing",
            {"alpha": S.orientation(alpha), "beta": S.orientation(beta)},
        )
    M = apply_word(M, sewing_preparation(M, alpha, beta))[-1]
    same_vertex = M.boundary_vertex(alpha)[0] == M.boundary_vertex(beta)[0]

    cid = M.next_cut_id()
    rename = {boundary_leg(beta): cut_leg(cid, 1), boundary_leg(alpha): cut_leg(cid, -1)}
    vertices = [Vertex(v.id, tuple(rename.get(leg, leg) for leg in v.legs)) for v in M.vertices]
    cuts = list(M.cuts) + [Cut(cid, IDENTITY_FRAME if same_vertex else None)]
    sewn = M.with_vertices(vertices, cuts, surface=_sewn_surface(S, alpha, beta)).validate()
    logger.debug(f"sewed {alpha} to {beta} along cut {cid}")
    return sewn, cid


def sewing_preparation(M: FineMarking, alpha: str, beta: str) -> List[Move]:
    """Moves applied before sewing: empty unless the circles share a component but not a vertex."""
    if M.surface.component_index(alpha) != M.surface.component_index(beta):
        return []
    return gathering_word(M, alpha, beta)


# ============================================================================
# Cylinders
# ============================================================================

def glue_cylinder(M: FineMarking, gamma: str, free: Optional[str] = None) -> Tuple[FineMarking, int, int]:
    """
    Sews a standard cylinder onto the circle gamma of M.

    The cylinder is a single vertex (glued end, free end) with no cuts; its
    free end is called free (gamma + "'" by default) and has gamma's
    orientation. Returns the sewn marking, the new cut and the cylinder's
    vertex id.

    Raises:
        UnknownBoundary: gamma is not a boundary circle of M
    """
    free = free if free is not None else f"{gamma}'"
    orientation = M.surface.orientation(gamma)
    glued = f"{gamma}~"
    cylinder = standard_marking(2, [-orientation, orientation], ids=[glued, free])
    union = disjoint_union(M, cylinder)
    alpha, beta = (glued, gamma) if orientation == OUT else (gamma, glued)
    sewn, cid = sew_marking(union, alpha, beta)
    return sewn, cid, M.next_vertex_id()


def cylinder_compression(N: FineMarking, cid: int, cylinder: int) -> List[Move]:
    """
    Z^k F Z^-k contracting the cut cid of a glued cylinder into its neighbour.

    The Z moves bring the cut to the last leg of the neighbouring vertex so
    that F applies, and then restore the neighbour's leg order with the free
    end in place of the cut.
    """
    (pv, pi, _), = [end for end in N.cut_ends(cid) if end[0] != cylinder]
    k = (pi + 1) % len(N.vertex(pv).legs)
    return [Move.z(pv)] * k + [Move.f(cid)] + [Move.z(pv, inverse=True)] * k
