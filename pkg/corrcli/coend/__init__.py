"""The coend K and its structure morphisms."""

from .coend import (
    CoendK,
    build_coend_K,
    coend_structure_morphism,
    central_charge,
    scalar_of,
    slide_through_handle,
    solve_integral,
    twist_around_handle,
)
from .modularity import (
    check_category_modularity,
    check_coend_identities,
    check_dinaturality,
    compare_coends,
    gauss_sum_ratio,
)

__all__ = [
    'CoendK', 'build_coend_K', 'coend_structure_morphism', 'central_charge', 'scalar_of',
    'slide_through_handle', 'solve_integral', 'twist_around_handle', 'check_category_modularity',
    'check_coend_identities', 'check_dinaturality', 'compare_coends', 'gauss_sum_ratio',
]
