"""Ribbon categories: objects, morphisms, skeletal and Hopf backends."""

from .objects import Atom, ObjectExpr, Morphism, tensor_all
from .base import RibbonCategory, atom_expr
from .skeletal import SkeletalCategory
from .hopf import HopfCategory
from .constructions import (
    deligne_product,
    reverse,
    drinfeld_double_cyclic,
    product_label,
    quantum_dimensions,
    global_dimension_squared,
    gauss_sums,
    s_matrix_unnormalized,
    t_matrix,
    modular_data,
)
from .loader import load_category
from .axioms import check_category_axioms

__all__ = [
    'Atom', 'ObjectExpr', 'Morphism', 'tensor_all', 'RibbonCategory', 'atom_expr',
    'SkeletalCategory', 'HopfCategory', 'deligne_product', 'reverse', 'drinfeld_double_cyclic',
    'product_label', 'quantum_dimensions', 'global_dimension_squared', 'gauss_sums',
    's_matrix_unnormalized', 't_matrix', 'modular_data', 'load_category', 'check_category_axioms',
]
