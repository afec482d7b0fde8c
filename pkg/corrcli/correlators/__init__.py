"""Correlators of a Frobenius algebra: closed formula, block vectors and consistency."""

from .system import CorrelatorSystem
from .vectors import (
    correlator_vector,
    cut_apart,
    elementary_correlator,
    elementary_vector,
    reference_marking,
    reference_vector,
    sewn_vector,
)
from .consistency import (
    check_consistency,
    check_surface,
    closed_versus_sewn,
    move_invariance,
    nondegeneracy,
    relation_invariance,
    s_invariance,
    scope_markings,
    verify_bijection_roundtrip,
)

__all__ = [
    'CorrelatorSystem', 'correlator_vector', 'cut_apart', 'elementary_correlator', 'elementary_vector',
    'reference_marking', 'reference_vector', 'sewn_vector', 'check_consistency', 'check_surface',
    'closed_versus_sewn', 'move_invariance', 'nondegeneracy', 'relation_invariance', 's_invariance',
    'scope_markings', 'verify_bijection_roundtrip',
]
