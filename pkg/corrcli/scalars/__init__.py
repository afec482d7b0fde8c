"""Exact scalars: cyclotomic fields and sparse matrices over them."""

from .field import (
    FieldElement,
    as_field,
    field_arith,
    root_of_unity,
    sqrt_in_field,
    totient,
    cyclotomic_coeffs,
)
from .linalg import Matrix, stack_columns

__all__ = [
    'FieldElement', 'as_field', 'field_arith', 'root_of_unity', 'sqrt_in_field',
    'totient', 'cyclotomic_coeffs', 'Matrix', 'stack_columns',
]
