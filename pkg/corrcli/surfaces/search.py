#!/usr/bin/env python3
"""
Corr CLI - Move Search
Breadth-first search over the graph of fine markings of one surface

Version: 1.0.0
"""

from collections import deque
from typing import Callable, Dict, List, Tuple

import networkx as nx

from ..core.errors import CorrError, PreconditionViolated
from ..core.logging_config import logger
from .marking import FineMarking
from .moves import Move, apply_move, candidate_moves

MAX_SEARCH_NODES = 5000


def marking_key(M: FineMarking) -> Tuple:
    nf = M.normal_form()
    return nf.vertices, nf.cuts


def _split_moves(M: FineMarking, max_vertices: int) -> List[Move]:
    if len(M.vertices) >= max_vertices:
        return []
    out = []
    for v in M.vertices:
        for k in range(1, len(v.legs) + 1):
            for side in (1, -1):
                mv = Move.f_split(v.id, k, side)
                try:
                    apply_move(M, mv)
                except CorrError:
                    continue
                out.append(mv)
    return out


def neighbours(M: FineMarking, max_vertices: int, framed: bool = True) -> List[Tuple[Move, FineMarking]]:
    """
    One-move neighbours of M; S and T on handle cuts only when framed is set.

    Markings whose cut graph has chords are left out, so searches stay among
    markings whose only cycles are handle cuts.
    """
    moves = candidate_moves(M, kinds=("Z", "B", "F", "A")) + _split_moves(M, max_vertices)
    if framed:
        handles = [c.id for c in M.cuts if M.is_self_cut(c.id)]
        moves += [Move.s(cid) for cid in handles]
        moves += [Move.t(cid) for cid in handles]
        moves += [Move.t(cid, inverse=True) for cid in handles]
    out = []
    for mv in moves:
        nxt = apply_move(M, mv)
        if not nxt.has_chords():
            out.append((mv, nxt))
    return out


def search_moves(source: FineMarking, is_goal: Callable[[FineMarking], bool], max_vertices: int,
                 max_nodes: int = MAX_SEARCH_NODES, framed: bool = True) -> List[Move]:
    """
    Shortest move word from source to the first marking satisfying is_goal.

    Markings are identified by normal form; ties are broken by the
    deterministic move enumeration order and the path is read off with
    networkx.

    Raises:
        PreconditionViolated: no goal within the search limit
    """
    if is_goal(source):
        return []
    start_key = marking_key(source)
    G = nx.DiGraph()
    representatives: Dict[Tuple, FineMarking] = {start_key: source}
    queue = deque([start_key])
    goal_key = None
    while queue and len(representatives) < max_nodes and goal_key is None:
        current_key = queue.popleft()
        for mv, nxt in neighbours(representatives[current_key], max_vertices, framed):
            nxt_key = marking_key(nxt)
            if nxt_key in representatives:
                continue
            representatives[nxt_key] = nxt
            G.add_edge(current_key, nxt_key, move=mv)
            queue.append(nxt_key)
            if is_goal(nxt):
                goal_key = nxt_key
                break
    if goal_key is None:
        raise PreconditionViolated("No move path to the requested marking within the search limit",
                                   {"explored": len(representatives)})
    nodes = nx.shortest_path(G, start_key, goal_key)
    word = [G.edges[a, b]["move"] for a, b in zip(nodes, nodes[1:])]
    logger.debug(f"move path of length {len(word)} after exploring {len(representatives)} markings")
    return word


def gathering_word(M: FineMarking, alpha: str, beta: str, max_nodes: int = MAX_SEARCH_NODES) -> List[Move]:
    """
    Shortest Z/B/F/A word after which the circles alpha and beta sit on one vertex.

    Frames are left alone, so handle cuts keep their frames along the word.

    Raises:
        PreconditionViolated: no such word within the search limit
    """
    def together(N: FineMarking) -> bool:
        return N.boundary_vertex(alpha)[0] == N.boundary_vertex(beta)[0]

    word = search_moves(M, together, len(M.vertices), max_nodes, framed=False)
    logger.debug(f"gathered {alpha} and {beta} onto one vertex with {len(word)} moves")
    return word
