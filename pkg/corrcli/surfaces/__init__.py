"""Extended surfaces, fine markings, moves and their relations."""

from .marking import (
    IDENTITY_FRAME,
    Cut,
    FineMarking,
    Vertex,
    boundary_leg,
    cut_leg,
    disjoint_union,
    load_marking,
    one_holed_torus,
    standard_marking,
)
from .moves import Move, apply_move, apply_word, candidate_moves, inverse_move, is_admissible
from .relations import (
    RELATION_ALIASES,
    RelationInstance,
    check_relation_rewrite,
    relation_instances,
    relation_names,
)
from .search import gathering_word
from .sewing import sew_marking, sewing_preparation
from .surface import IN, OUT, Boundary, Component, ExtendedSurface

__all__ = [
    'IDENTITY_FRAME', 'Cut', 'FineMarking', 'Vertex', 'boundary_leg', 'cut_leg', 'disjoint_union',
    'load_marking', 'one_holed_torus', 'standard_marking', 'Move', 'apply_move', 'apply_word',
    'candidate_moves', 'inverse_move', 'is_admissible', 'RELATION_ALIASES', 'RelationInstance',
    'check_relation_rewrite', 'relation_instances', 'relation_names', 'sew_marking',
    'gathering_word', 'sewing_preparation',
    'IN', 'OUT', 'Boundary', 'Component', 'ExtendedSurface',
]
