"""Frobenius algebras on the bulk object: data, loading and axiom checks."""

from .data import FrobeniusData, from_algebra, from_generators, omega_from, phi_from_form
from .tensors import module_morphism, summand_morphism, tensor_morphism
from .canonical import canonical_algebra, multiplication_coefficient
from .loader import load_algebra, parse_algebra, register_bulk_object
from .checks import check_axioms, check_modular, modular_invariant, modular_vector

__all__ = [
    'FrobeniusData', 'from_algebra', 'from_generators', 'omega_from', 'phi_from_form',
    'module_morphism', 'summand_morphism', 'tensor_morphism', 'canonical_algebra',
    'multiplication_coefficient', 'load_algebra', 'parse_algebra', 'register_bulk_object',
    'check_axioms', 'check_modular', 'modular_invariant', 'modular_vector',
]
