#!/usr/bin/env python3
"""
Corr CLI - Transport
Identifies block spaces of two markings of one surface along a move path

Version: 1.0.0
"""

from typing import List, Optional

from ..core.errors import NotSameSurface, PreconditionViolated
from ..scalars import Matrix
from ..surfaces.marking import FineMarking
from ..surfaces.moves import Move
from ..surfaces.search import MAX_SEARCH_NODES, marking_key, search_moves
from .matrices import word_matrix
from .space import BlockFunctor


def find_move_path(source: FineMarking, target: FineMarking,
                   max_nodes: int = MAX_SEARCH_NODES) -> List[Move]:
    """
    Shortest move word from source to target, comparing markings by normal form.

    Raises:
        NotSameSurface: the markings live on different surfaces
        PreconditionViolated: no path within the search limit
    """
    if source.surface != target.surface:
        raise NotSameSurface("Transport needs two markings of the same surface")
    goal_key = marking_key(target)
    max_vertices = max(len(source.vertices), len(target.vertices)) + 1
    return search_moves(source, lambda N: marking_key(N) == goal_key, max_vertices, max_nodes)


def transport(bf: BlockFunctor, source: FineMarking, target: FineMarking,
              word: Optional[List[Move]] = None) -> Matrix:
    """
    Matrix Bl(source) -> Bl(target) along the given word or a shortest path.

    Moves act on concrete vertex and cut ids, so the path is replayed from
    source; the final marking agrees with target up to renumbering.
    """
    if word is None:
        word = find_move_path(source, target)
    matrix, path = word_matrix(bf, source, word)
    if not path[-1].same_as(target, ignore_central=True):
        raise PreconditionViolated("The move word does not end at the target marking")
    return matrix
