#!/usr/bin/env python3
"""
Unit Tests for corrcli.scalars.field

Tests exact cyclotomic arithmetic including:
- Field operations and their error cases
- Parsing and printing of the "(1 - z^2)/2" format
- Square roots and field axioms on random elements

Version: 1.0.0
"""

import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from corrcli.core.errors import DataFormatError, DivisionByZero, NotRepresentable, OrderMismatch
from corrcli.scalars import FieldElement, as_field, field_arith, root_of_unity, sqrt_in_field, totient


def elements(order: int):
    """Random elements of Q(zeta_order) with small coefficients."""
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.lists(coeff, min_size=totient(order), max_size=totient(order)).map(
        lambda cs: FieldElement(cs, order))


# ============================================================================
# Test Field Operations
# ============================================================================

class TestFieldArith:
    """Tests for field_arith and the arithmetic operators."""

    @pytest.mark.unit
    def test_half_plus_half(self):
        half = FieldElement.from_rational(Fraction(1, 2))
        assert field_arith("add", half, half) == 1

    @pytest.mark.unit
    def test_i_squared(self):
        i = root_of_unity(4)
        assert field_arith("mul", i, i) == -1

    @pytest.mark.unit
    def test_inverse_in_q_zeta5(self):
        z = root_of_unity(5)
        a = 1 + z + z ** 4
        assert (field_arith("inv", a) * a).is_one()

    @pytest.mark.unit
    def test_negation(self):
        z = root_of_unity(3)
        assert (field_arith("neg", z) + z).is_zero()

    @pytest.mark.unit
    def test_inverse_of_zero_raises(self):
        with pytest.raises(DivisionByZero):
            field_arith("inv", FieldElement.zero(5))

    @pytest.mark.unit
    def test_unknown_operation(self):
        with pytest.raises(ValueError):
            field_arith("pow", FieldElement.one())

    @pytest.mark.unit
    def test_rationals_coerce_into_any_order(self):
        z = root_of_unity(8)
        assert (z + FieldElement.one()) - z == 1

    @pytest.mark.unit
    def test_divisor_orders_are_promoted(self):
        # zeta_4 = zeta_8^2
        assert root_of_unity(4) * FieldElement.one(8) == root_of_unity(8) ** 2

    @pytest.mark.unit
    def test_incompatible_orders(self):
        with pytest.raises(OrderMismatch):
            root_of_unity(3) + root_of_unity(5)

    @pytest.mark.unit
    def test_root_of_unity_has_its_order(self):
        z = root_of_unity(5)
        assert (z ** 5).is_one()
        assert not (z ** 2).is_one()

    @pytest.mark.unit
    def test_conjugate_is_inverse_on_roots_of_unity(self):
        z = root_of_unity(5, 2)
        assert z.conj() == z.inverse()


# ============================================================================
# Test Parsing and Printing
# ============================================================================

class TestParsing:
    """Tests for FieldElement.parse and to_string."""

    @pytest.mark.unit
    @pytest.mark.parametrize("text,order,expected", [
        ("1/2", 1, Fraction(1, 2)),
        ("-3", 1, -3),
        ("z^2", 4, -1),
        ("(1 - z^2)/2", 4, 1),
        ("z^5", 5, 1),
    ])
    def test_parse_values(self, text, order, expected):
        assert FieldElement.parse(text, order) == expected

    @pytest.mark.unit
    def test_parse_reciprocal(self):
        a = FieldElement.parse("1/(1 + z + z^4)", 5)
        assert (a * FieldElement.parse("1 + z + z^4", 5)).is_one()

    @pytest.mark.unit
    @pytest.mark.parametrize("bad", ["1 +", "sqrt(", 0.5, True])
    def test_parse_rejects(self, bad):
        with pytest.raises(DataFormatError):
            FieldElement.parse(bad, 4)

    @pytest.mark.unit
    def test_to_string_round_trip(self):
        a = FieldElement([Fraction(1, 2), Fraction(-3, 2), 0, 1], 5)
        assert FieldElement.parse(a.to_string(), 5) == a

    @pytest.mark.unit
    def test_zero_prints_as_zero(self):
        assert FieldElement.zero(7).to_string() == "0"

    @pytest.mark.unit
    def test_as_field_accepts_strings(self):
        assert as_field("z^2", 4) == -1


# ============================================================================
# Test Square Roots
# ============================================================================

class TestSqrtInField:
    """Tests for sqrt_in_field."""

    @pytest.mark.unit
    def test_rational_square(self):
        assert sqrt_in_field(FieldElement.from_rational(4)) == 2

    @pytest.mark.unit
    def test_minus_one_in_gaussian_rationals(self):
        assert sqrt_in_field(FieldElement.from_rational(-1, 4)) == root_of_unity(4)

    @pytest.mark.unit
    def test_five_in_q_zeta5(self):
        five = FieldElement.from_rational(5, 5)
        root = sqrt_in_field(five)
        assert root * root == five
        assert not root.is_rational()

    @pytest.mark.unit
    def test_two_in_q_zeta8(self):
        two = FieldElement.from_rational(2, 8)
        root = sqrt_in_field(two)
        assert root * root == two
        assert root.leading_sign() == 1

    @pytest.mark.unit
    def test_two_is_not_a_rational_square(self):
        with pytest.raises(NotRepresentable):
            sqrt_in_field(FieldElement.from_rational(2))

    @pytest.mark.unit
    def test_zero(self):
        assert sqrt_in_field(FieldElement.zero(5)).is_zero()


# ============================================================================
# Test Field Axioms
# ============================================================================

class TestFieldAxioms:
    """Field axioms on random elements of Q(zeta_5)."""

    @pytest.mark.unit
    @settings(max_examples=30, deadline=None)
    @given(elements(5), elements(5), elements(5))
    def test_associativity_and_distributivity(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c

    @pytest.mark.unit
    @settings(max_examples=30, deadline=None)
    @given(elements(5), elements(5))
    def test_commutativity(self, a, b):
        assert a * b == b * a
        assert a + b == b + a

    @pytest.mark.unit
    @settings(max_examples=30, deadline=None)
    @given(elements(5))
    def test_inverse(self, a):
        if a.is_zero():
            return
        assert (a * a.inverse()).is_one()

    @pytest.mark.unit
    @settings(max_examples=30, deadline=None)
    @given(elements(8))
    def test_reduction_is_idempotent(self, a):
        assert FieldElement(a.coeffs, 8).coeffs == a.coeffs
