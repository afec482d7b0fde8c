#!/usr/bin/env python3
"""
Corr CLI - Category Constructions
Deligne products, reversed braidings and Drinfeld doubles of cyclic groups

Version: 1.0.0
"""

import itertools
from math import gcd
from typing import Dict, List, Tuple

from ..core.logging_config import logger
from ..scalars import FieldElement, Matrix, as_field, root_of_unity
from .hopf import HopfCategory
from .skeletal import SkeletalCategory

PRODUCT_SEPARATOR = "."


def product_label(a: str, b: str) -> str:
    return f"{a}{PRODUCT_SEPARATOR}{b}"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# ============================================================================
# Skeletal Constructions
# ============================================================================

def deligne_product(C1: SkeletalCategory, C2: SkeletalCategory, name: str = "") -> SkeletalCategory:
    """C1 (x) C2 with simples 'a.b'; all symbols are products of the factors' symbols."""
    order = _lcm(C1.order, C2.order)
    pairs = list(itertools.product(C1.simples, C2.simples))
    label = {p: product_label(*p) for p in pairs}

    duals = {label[(a, b)]: product_label(C1.duals[a], C2.duals[b]) for a, b in pairs}
    fusion = {}
    for (a1, b1), (a2, b2) in itertools.product(pairs, repeat=2):
        outs = [label[(c1, c2)] for c1 in C1.fuse(a1, a2) for c2 in C2.fuse(b1, b2)]
        if outs:
            fusion[(label[(a1, b1)], label[(a2, b2)])] = outs

    F: Dict[Tuple[str, str, str, str], Dict[Tuple[str, str], FieldElement]] = {}
    for (a, b, c, d) in itertools.product(pairs, repeat=4):
        m1, rows1, cols1 = C1.f_matrix(a[0], b[0], c[0], d[0])
        m2, rows2, cols2 = C2.f_matrix(a[1], b[1], c[1], d[1])
        if not rows1 or not rows2:
            continue
        entries = {}
        for (i1, j1), (i2, j2) in itertools.product(itertools.product(range(len(rows1)), range(len(cols1))),
                                                     itertools.product(range(len(rows2)), range(len(cols2)))):
            value = as_field(m1[(i1, j1)], order) * as_field(m2[(i2, j2)], order)
            if not value.is_zero():
                entries[(product_label(rows1[i1], rows2[i2]), product_label(cols1[j1], cols2[j2]))] = value
        F[(label[a], label[b], label[c], label[d])] = entries

    R = {}
    for a, b in itertools.product(pairs, repeat=2):
        for c1 in C1.fuse(a[0], b[0]):
            for c2 in C2.fuse(a[1], b[1]):
                R[(label[a], label[b], product_label(c1, c2))] = (
                    as_field(C1.r_symbol(a[0], b[0], c1), order) * as_field(C2.r_symbol(a[1], b[1], c2), order)
                )
    twist = {
        label[p]: as_field(C1.topological_twist(p[0]), order) * as_field(C2.topological_twist(p[1]), order)
        for p in pairs
    }
    pivot = {
        label[p]: as_field(C1.pivot_coefficient(p[0]), order) * as_field(C2.pivot_coefficient(p[1]), order)
        for p in pairs
    }
    logger.debug(f"Deligne product {C1.name} x {C2.name}: {len(pairs)} simples, order {order}")
    product = SkeletalCategory(
        name or f"{C1.name}x{C2.name}", order, [label[p] for p in pairs], duals, fusion, F, R, twist, pivot,
        unit_label=product_label(C1.unit_label, C2.unit_label),
    )
    product.factors = (C1, C2)
    return product


def reverse(C: SkeletalCategory, name: str = "") -> SkeletalCategory:
    """Same fusion and associators, braiding c~_{a,b} = c_{b,a}^{-1}, twist theta^{-1}."""
    R = {}
    for a, b in itertools.product(C.simples, repeat=2):
        for c in C.fuse(a, b):
            R[(a, b, c)] = C.r_symbol(b, a, c).inverse()
    F = {}
    for key in itertools.product(C.simples, repeat=4):
        m, rows, cols = C.f_matrix(*key)
        if rows:
            F[key] = {(rows[i], cols[j]): v for (i, j), v in m.entries.items()}
    fusion = {(a, b): C.fuse(a, b) for a, b in itertools.product(C.simples, repeat=2) if C.fuse(a, b)}
    return SkeletalCategory(
        name or f"{C.name}-rev", C.order, C.simples, C.duals, fusion, F, R,
        {a: C.topological_twist(a).inverse() for a in C.simples},
        {a: C.pivot_coefficient(a) for a in C.simples},
        unit_label=C.unit_label,
    )


# ============================================================================
# Modular Data
# ============================================================================

def quantum_dimensions(C: SkeletalCategory) -> Dict[str, FieldElement]:
    return {a: C.qdim(a) for a in C.simples}


def global_dimension_squared(C: SkeletalCategory) -> FieldElement:
    total = FieldElement.zero(C.order)
    for d in quantum_dimensions(C).values():
        total = total + d * d
    return total


def gauss_sums(C: SkeletalCategory) -> Tuple[FieldElement, FieldElement]:
    """(p+, p-) = (sum theta_a d_a^2, sum theta_a^{-1} d_a^2)."""
    plus = minus = FieldElement.zero(C.order)
    for a in C.simples:
        d2 = C.qdim(a) * C.qdim(a)
        plus = plus + C.topological_twist(a) * d2
        minus = minus + C.topological_twist(a).inverse() * d2
    return plus, minus


def s_matrix_unnormalized(C: SkeletalCategory) -> Matrix:
    """S~_ab = sum_c N_{a b-bar}^c theta_c / (theta_a theta_b) d_c."""
    n = len(C.simples)
    entries = {}
    for i, a in enumerate(C.simples):
        for j, b in enumerate(C.simples):
            total = FieldElement.zero(C.order)
            for c in C.fuse(a, C.duals[b]):
                total = total + C.topological_twist(c) * C.qdim(c)
            total = total / (C.topological_twist(a) * C.topological_twist(b))
            entries[(i, j)] = total
    return Matrix(n, n, entries, C.order)


def t_matrix(C: SkeletalCategory) -> Matrix:
    return Matrix.diag([C.topological_twist(a) for a in C.simples], C.order)


def modular_data(C: SkeletalCategory) -> Dict[str, object]:
    plus, minus = gauss_sums(C)
    s = s_matrix_unnormalized(C)
    return {
        "quantum_dimensions": {a: d.to_string() for a, d in quantum_dimensions(C).items()},
        "global_dimension_squared": global_dimension_squared(C).to_string(),
        "gauss_sums": {"plus": plus.to_string(), "minus": minus.to_string()},
        "s_matrix_unnormalized": s.to_json(),
        "s_rank": s.rank(),
        "t_matrix_diagonal": [C.topological_twist(a).to_string() for a in C.simples],
    }


# ============================================================================
# Hopf Constructions
# ============================================================================

def drinfeld_double_cyclic(n: int, name: str = "") -> HopfCategory:
    """
    D(Z/n) with basis e_(g,h) = delta_g h, index g*n + h.

    The simple module with flux a and charge q is one-dimensional, e_(g,h)
    acting by delta_{g,a} zeta_n^{q h}. It is named 'q.a'; for n = 2 the
    toric labels 1, e (charge), m (flux), f are used instead.
    """
    order = n if n > 2 else 1
    d = n * n
    idx = lambda g, h: (g % n) * n + (h % n)  # noqa: E731
    one = FieldElement.one(order)

    mult = {}
    for g, h, g2, h2 in itertools.product(range(n), repeat=4):
        if g == g2:
            mult[(idx(g, h), idx(g2, h2))] = {idx(g, h + h2): one}
    unit = [one if h == 0 else FieldElement.zero(order) for g in range(n) for h in range(n)]
    comult = {
        idx(g, h): [(idx(g1, h), idx(g - g1, h), one) for g1 in range(n)]
        for g in range(n) for h in range(n)
    }
    counit = [one if g == 0 else FieldElement.zero(order) for g in range(n) for h in range(n)]
    antipode = Matrix(d, d, {(idx(-g, -h), idx(g, h)): 1 for g in range(n) for h in range(n)}, order)
    R = [(idx(g, 0), idx(g2, g), one) for g in range(n) for g2 in range(n)]
    ribbon = [FieldElement.zero(order)] * d
    for g in range(n):
        ribbon[idx(g, -g)] = one

    zeta = root_of_unity(n, 1) if n > 2 else FieldElement.from_rational(1 - n, order)
    modules = {}
    for a in range(n):
        for q in range(n):
            action = []
            for g in range(n):
                for h in range(n):
                    value = zeta ** (q * h) if g == a else FieldElement.zero(order)
                    action.append(Matrix(1, 1, {(0, 0): value}, order))
            modules[_dz_label(q, a, n)] = action
    return HopfCategory(name or f"D(Z/{n})", order, d, mult, unit, comult, counit, antipode, R, ribbon, modules)


def _dz_label(charge: int, flux: int, n: int) -> str:
    if n == 2:
        return {(0, 0): "1", (1, 0): "e", (0, 1): "m", (1, 1): "f"}[(charge, flux)]
    return f"{charge}.{flux}"


def hopf_structure_constants(H: HopfCategory) -> Dict[str, List]:
    """Dense summary used to compare a loaded Hopf file against a construction."""
    return {
        "dim": H.dim,
        "unit": [x.to_string() for x in H.unit_vec],
        "counit": [x.to_string() for x in H.counit],
        "antipode": H.antipode.to_json(),
        "ribbon": [x.to_string() for x in H.ribbon],
    }
