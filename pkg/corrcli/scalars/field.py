#!/usr/bin/env python3
"""
Corr CLI - Cyclotomic Field
Exact arithmetic in Q(zeta_n) with canonical reduced residues

Version: 1.0.0
"""

import itertools
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import mpmath
import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from ..core.config import SQRT_SEARCH_PRECISION
from ..core.errors import DataFormatError, DivisionByZero, NotRepresentable, OrderMismatch
from ..core.logging_config import logger

Scalar = Union[int, Fraction, "FieldElement"]

_Z = sympy.Symbol("z")
_TRANSFORMS = standard_transformations + (convert_xor, implicit_multiplication_application)


# ============================================================================
# Field Tables
# ============================================================================

@lru_cache(maxsize=None)
def totient(n: int) -> int:
    return int(sympy.totient(n))


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> Tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    poly = sympy.Poly(sympy.cyclotomic_poly(n, _Z), _Z)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Reduced residues of z^k for 0 <= k < 2*phi(n) - 1."""
    phi = totient(n)
    cyc = cyclotomic_coeffs(n)
    table: List[Tuple[Fraction, ...]] = []
    for k in range(max(1, 2 * phi - 1)):
        if k < phi:
            row = [Fraction(0)] * phi
            row[k] = Fraction(1)
        else:
            prev = table[k - 1]
            # z * prev, then replace z^phi by -(c_0 + ... + c_{phi-1} z^{phi-1})
            shifted = [Fraction(0)] + list(prev[:-1])
            top = prev[-1]
            row = [shifted[i] - top * cyc[i] for i in range(phi)]
        table.append(tuple(row))
    return tuple(table)


def _reduce(coeffs: Sequence[Fraction], n: int) -> Tuple[Fraction, ...]:
    phi = totient(n)
    if len(coeffs) <= phi:
        return tuple(Fraction(c) for c in coeffs) + (Fraction(0),) * (phi - len(coeffs))
    # Fold z^k -> z^(k mod n) first, so the table stays small
    folded = [Fraction(0)] * min(len(coeffs), n)
    for k, c in enumerate(coeffs):
        if c:
            folded[k % n] += c
    table = _reduction_table(n)
    out = [Fraction(0)] * phi
    for k, c in enumerate(folded):
        if not c:
            continue
        if k < len(table):
            row = table[k]
        else:
            row = _power_residue(k, n)
        for i, r in enumerate(row):
            if r:
                out[i] += c * r
    return tuple(out)


@lru_cache(maxsize=None)
def _power_residue(k: int, n: int) -> Tuple[Fraction, ...]:
    table = _reduction_table(n)
    if k < len(table):
        return table[k]
    base = _power_residue(k - 1, n)
    phi = totient(n)
    cyc = cyclotomic_coeffs(n)
    shifted = [Fraction(0)] + list(base[:-1])
    top = base[-1]
    return tuple(shifted[i] - top * cyc[i] for i in range(phi))


# ============================================================================
# Field Element
# ============================================================================

class FieldElement:
    """An element of Q(zeta_n), stored as a reduced residue modulo Phi_n."""

    __slots__ = ("order", "coeffs", "_rational", "_hash")

    def __init__(self, coeffs: Iterable[Union[int, Fraction]], order: int = 1):
        if order < 1:
            raise ValueError(f"Cyclotomic order must be positive, got {order}")
        self.order = order
        self.coeffs = _reduce([Fraction(c) for c in coeffs], order)
        self._rational = not any(self.coeffs[1:])
        self._hash = None

    # --------------------------------------------------------------------- #
    # Constructors
    # --------------------------------------------------------------------- #

    @classmethod
    def _raw(cls, coeffs: Tuple[Fraction, ...], order: int) -> "FieldElement":
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._rational = not any(coeffs[1:])
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, value: Union[int, Fraction], order: int = 1) -> "FieldElement":
        phi = totient(order)
        return cls._raw((Fraction(value),) + (Fraction(0),) * (phi - 1), order)

    @classmethod
    def zero(cls, order: int = 1) -> "FieldElement":
        return cls.from_rational(0, order)

    @classmethod
    def one(cls, order: int = 1) -> "FieldElement":
        return cls.from_rational(1, order)

    @classmethod
    def parse(cls, text: Union[str, int, float], order: int = 1) -> "FieldElement":
        """Parses strings such as '(1 - z^2)/2' or '1/(1 + z + z^4)'."""
        if isinstance(text, bool):
            raise DataFormatError(f"Not a field element: {text!r}")
        if isinstance(text, int):
            return cls.from_rational(text, order)
        if isinstance(text, float):
            raise DataFormatError(f"Floating-point values are not exact: {text!r}")
        try:
            expr = parse_expr(str(text), local_dict={"z": _Z}, transformations=_TRANSFORMS)
            num, den = sympy.fraction(sympy.together(expr))
            num_el = cls._from_sympy_poly(num, order)
            den_el = cls._from_sympy_poly(den, order)
        except Exception as e:  # sympy raises a zoo of parse and polynomial errors
            raise DataFormatError(f"Cannot parse field element {text!r}: {e}") from e
        return num_el / den_el

    @classmethod
    def _from_sympy_poly(cls, expr, order: int) -> "FieldElement":
        poly = sympy.Poly(sympy.expand(expr), _Z, domain="QQ")
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        return cls(coeffs, order)

    # --------------------------------------------------------------------- #
    # Predicates
    # --------------------------------------------------------------------- #

    def is_zero(self) -> bool:
        return self._rational and self.coeffs[0] == 0

    def is_one(self) -> bool:
        return self._rational and self.coeffs[0] == 1

    def is_rational(self) -> bool:
        return self._rational

    def to_fraction(self) -> Fraction:
        if not self._rational:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def leading_sign(self) -> int:
        """Sign of the first nonzero coefficient (0 for zero)."""
        for c in self.coeffs:
            if c:
                return 1 if c > 0 else -1
        return 0

    # --------------------------------------------------------------------- #
    # Coercion
    # --------------------------------------------------------------------- #

    def promote(self, order: int) -> "FieldElement":
        """Embeds Q(zeta_m) into Q(zeta_n) for m | n via zeta_m -> zeta_n^(n/m)."""
        if order == self.order:
            return self
        if self._rational:
            return FieldElement.from_rational(self.coeffs[0], order)
        if order % self.order:
            raise OrderMismatch(
                f"Cannot embed Q(zeta_{self.order}) into Q(zeta_{order})",
                {"orders": [self.order, order]},
            )
        step = order // self.order
        coeffs = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for k, c in enumerate(self.coeffs):
            coeffs[k * step] = c
        return FieldElement(coeffs, order)

    def _coerce(self, other: Scalar) -> Tuple["FieldElement", "FieldElement"]:
        if isinstance(other, FieldElement):
            if other.order == self.order:
                return self, other
            if other._rational:
                return self, FieldElement.from_rational(other.coeffs[0], self.order)
            if self._rational:
                return FieldElement.from_rational(self.coeffs[0], other.order), other
            big = self.order * other.order // gcd(self.order, other.order)
            if big in (self.order, other.order):
                return self.promote(big), other.promote(big)
            raise OrderMismatch(
                f"Incompatible cyclotomic orders {self.order} and {other.order}",
                {"orders": [self.order, other.order]},
            )
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self, FieldElement.from_rational(other, self.order)
        return NotImplemented, NotImplemented  # type: ignore[return-value]

    # --------------------------------------------------------------------- #
    # Arithmetic
    # --------------------------------------------------------------------- #

    def __add__(self, other: Scalar) -> "FieldElement":
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return FieldElement._raw(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.order)

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement._raw(tuple(-x for x in self.coeffs), self.order)

    def __sub__(self, other: Scalar) -> "FieldElement":
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return FieldElement._raw(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), a.order)

    def __rsub__(self, other: Scalar) -> "FieldElement":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "FieldElement":
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        if b._rational:
            s = b.coeffs[0]
            return FieldElement._raw(tuple(x * s for x in a.coeffs), a.order)
        if a._rational:
            s = a.coeffs[0]
            return FieldElement._raw(tuple(x * s for x in b.coeffs), a.order)
        phi = len(a.coeffs)
        prod = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] += x * y
        return FieldElement._raw(_reduce(prod, a.order), a.order)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("Inverse of zero field element")
        if self._rational:
            return FieldElement.from_rational(1 / self.coeffs[0], self.order)
        return _inverse_cached(self.coeffs, self.order)

    def __truediv__(self, other: Scalar) -> "FieldElement":
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other: Scalar) -> "FieldElement":
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = FieldElement.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> "FieldElement":
        """Galois conjugate zeta -> zeta^-1 (complex conjugation)."""
        n = self.order
        coeffs = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            coeffs[(-k) % n] += c
        return FieldElement(coeffs, n)

    # --------------------------------------------------------------------- #
    # Comparison
    # --------------------------------------------------------------------- #

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._rational and self.coeffs[0] == other
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.order == self.order:
            return self.coeffs == other.coeffs
        try:
            a, b = self._coerce(other)
        except OrderMismatch:
            return False
        return a.coeffs == b.coeffs

    def __ne__(self, other: object) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self._rational else hash((self.order, self.coeffs))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # --------------------------------------------------------------------- #
    # Numerics and Output
    # --------------------------------------------------------------------- #

    def to_complex(self, k: int = 1):
        """Value under the embedding zeta -> exp(2 pi i k / n), as an mpmath number."""
        w = mpmath.expjpi(mpmath.mpf(2 * k) / self.order)
        total = mpmath.mpc(0)
        for j, c in enumerate(self.coeffs):
            if c:
                total += mpmath.mpf(c.numerator) / c.denominator * w ** j
        return total

    def to_string(self) -> str:
        if self.is_zero():
            return "0"
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            num = int(c * den)
            if k == 0:
                mono = str(abs(num))
            elif abs(num) == 1:
                mono = "z" if k == 1 else f"z^{k}"
            else:
                mono = f"{abs(num)}*z" if k == 1 else f"{abs(num)}*z^{k}"
            sign = "-" if num < 0 else "+"
            terms.append((sign, mono))
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, mono in terms[1:]:
            text += f" {sign} {mono}"
        if den == 1:
            return text
        if len(terms) == 1:
            return f"{text}/{den}"
        return f"({text})/{den}"

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"FieldElement({self.to_string()!r}, order={self.order})"


@lru_cache(maxsize=4096)
def _inverse_cached(coeffs: Tuple[Fraction, ...], order: int) -> FieldElement:
    poly = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], _Z, domain="QQ"
    )
    modulus = sympy.Poly(list(reversed(cyclotomic_coeffs(order))), _Z, domain="QQ")
    inv = poly.invert(modulus)
    out = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
    return FieldElement(out, order)


# ============================================================================
# Helpers
# ============================================================================

def as_field(value: Scalar, order: int = 1) -> FieldElement:
    """Coerces ints, Fractions and field elements into Q(zeta_order)."""
    if isinstance(value, FieldElement):
        return value if value.order == order else value.promote(order)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return FieldElement.from_rational(value, order)
    if isinstance(value, str):
        return FieldElement.parse(value, order)
    raise TypeError(f"Cannot convert {value!r} to a field element")


def root_of_unity(order: int, k: int = 1) -> FieldElement:
    """zeta_order^k."""
    k %= order
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    return FieldElement(coeffs, order)


def field_arith(op: str, a: FieldElement, b: Optional[Scalar] = None) -> FieldElement:
    """Named-operation front end used by reports and tests."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    raise ValueError(f"Unknown field operation: {op}")


# ============================================================================
# Square Roots
# ============================================================================

def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _to_fraction(x, bound: int) -> Fraction:
    return Fraction(mpmath.nstr(x, SQRT_SEARCH_PRECISION - 10, strip_zeros=False)).limit_denominator(bound)


def sqrt_in_field(a: FieldElement) -> FieldElement:
    """
    Square root inside Q(zeta_n).

    Candidates are located through the complex embeddings (one sign choice per
    embedding, Vandermonde solve) and accepted only after exact squaring. Of the
    two roots the one whose first nonzero coefficient is positive is returned.

    Raises:
        NotRepresentable: if a is not a square in the field
    """
    n = a.order
    if a.is_zero():
        return a
    if a.is_rational():
        root = _rational_sqrt(a.coeffs[0])
        if root is not None:
            return FieldElement.from_rational(root, n)
    if n == 1:
        raise NotRepresentable(
            f"{a} is not a square in Q; declare a larger cyclotomic_order",
            {"value": a.to_string(), "order": n},
        )

    phi = totient(n)
    exponents = [k for k in range(1, n + 1) if gcd(k, n) == 1]
    den_bound = 1
    for c in a.coeffs:
        den_bound = den_bound * c.denominator // gcd(den_bound, c.denominator)
    bound = max(10 ** 6, 4 * n * n * den_bound)

    with mpmath.workdps(SQRT_SEARCH_PRECISION):
        nodes = [mpmath.expjpi(mpmath.mpf(2 * k) / n) for k in exponents]
        vander = mpmath.matrix([[w ** j for j in range(phi)] for w in nodes])
        vander_inv = mpmath.inverse(vander)
        roots = [mpmath.sqrt(a.to_complex(k)) for k in exponents]
        found: List[FieldElement] = []
        for signs in itertools.product((1, -1), repeat=phi - 1):
            values = mpmath.matrix([roots[0]] + [s * r for s, r in zip(signs, roots[1:])])
            coeffs = vander_inv * values
            if any(abs(mpmath.im(c)) > mpmath.mpf(10) ** (-20) for c in coeffs):
                continue
            candidate = FieldElement([_to_fraction(mpmath.re(c), bound) for c in coeffs], n)
            if candidate * candidate == a:
                found.append(candidate)
                break

    if not found:
        raise NotRepresentable(
            f"{a} has no square root in Q(zeta_{n}); declare a larger cyclotomic_order",
            {"value": a.to_string(), "order": n},
        )
    root = found[0]
    result = root if root.leading_sign() > 0 else -root
    logger.debug(f"sqrt({a}) = {result} in Q(zeta_{n})")
    return result
