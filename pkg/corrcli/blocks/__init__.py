"""The pinned block functor: spaces, move matrices, sewing and transport."""

from .matrices import move_matrix, word_matrix
from .relations import check_instance, check_relations_on_blocks
from .sewing import SewingMap, sew_map, sewing_sequence
from .space import BlockFunctor, BlockSpace
from .transport import find_move_path, transport

__all__ = [
    'move_matrix', 'word_matrix', 'check_instance', 'check_relations_on_blocks', 'SewingMap',
    'sew_map', 'sewing_sequence', 'BlockFunctor', 'BlockSpace', 'find_move_path', 'transport',
]
