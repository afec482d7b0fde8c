#!/usr/bin/env python3
"""
Corr CLI - Coend Checks
Modularity criterion, coend identities, dinaturality and backend comparison

Version: 1.0.0
"""

import itertools
from typing import Any, Dict, List

from ..category.base import RibbonCategory, atom_expr
from ..category.constructions import gauss_sums, global_dimension_squared, quantum_dimensions
from ..category.objects import ObjectExpr
from ..category.skeletal import SkeletalCategory
from ..core.config import LAMBDA_SIGN_CONVENTION
from ..core.errors import NotRepresentable
from ..core.logging_config import logger
from ..scalars import Matrix, sqrt_in_field
from ..utils.helpers import _create_result
from .coend import CoendK

CRITERION = "operational modularity criterion: S_K invertible"


# ============================================================================
# Modularity
# ============================================================================

def check_category_modularity(C: RibbonCategory, K: CoendK) -> Dict[str, Any]:
    """True iff S_K is invertible on every sector; reports ranks and modular data."""
    ranks = {}
    modular = True
    for sector in sorted(K.S.blocks):
        block = K.S.blocks[sector]
        if block.rows == 0:
            continue
        rank = block.rank()
        ranks[sector] = {"rank": rank, "size": block.rows}
        if rank != block.rows:
            modular = False
    invariant_s = C.on_invariants(K.S)
    report = {
        "criterion": CRITERION,
        "sector_ranks": ranks,
        "s_on_invariants": invariant_s.to_json(),
        "s_on_invariants_rank": invariant_s.rank(),
        "integral_normalized": K.normalized,
        "integral_space_dim": K.integral_dim,
        "lambda_sign_convention": LAMBDA_SIGN_CONVENTION,
        "zeta": K.zeta.to_string(),
    }
    if isinstance(C, SkeletalCategory):
        plus, minus = gauss_sums(C)
        report["quantum_dimensions"] = {a: d.to_string() for a, d in quantum_dimensions(C).items()}
        report["gauss_sums"] = {"plus": plus.to_string(), "minus": minus.to_string()}
    logger.info(f"[{C.name}] modular: {modular}")
    if modular:
        return _create_result(True, message=f"{C.name} is modular ({CRITERION})", modular=True, **report)
    return _create_result(False, error=f"{C.name} is not modular: S_K is singular", modular=False, **report)


def gauss_sum_ratio(C: SkeletalCategory):
    """p+ / D, or None when D is not in the field."""
    plus, _ = gauss_sums(C)
    try:
        D = sqrt_in_field(global_dimension_squared(C))
    except NotRepresentable:
        return None
    return plus / D


# ============================================================================
# Identities
# ============================================================================

def _compare(name: str, lhs, rhs) -> Dict[str, Any]:
    if lhs.equals_matrixwise(rhs):
        return _create_result(True, message=f"{name} holds", name=name)
    return _create_result(False, error=f"{name} fails", name=name, first_difference=lhs.first_difference(rhs))


def check_coend_identities(K: CoendK) -> Dict[str, Any]:
    """S^2 = antipode^{-1}, (ST)^3 = zeta S^2, T i_X = i_X (theta (x) id) and the central charge."""
    C = K.category
    S2 = C.compose(K.S, K.S)
    ST = C.compose(K.S, K.T)
    checks = [
        _compare("S^2 = antipode^-1", S2, K.antipode_inv),
        _compare("(ST)^3 = zeta S^2", C.chain(ST, ST, ST), S2.scale(K.zeta)),
    ]
    failures = []
    for X in _generators(C):
        lhs = C.compose(K.T, C.coend_inclusion(X))
        rhs = C.compose(C.coend_inclusion(X), C.tensor(C.twist(X), C.identity(X.dual())))
        if not lhs.equals_matrixwise(rhs):
            failures.append(str(X))
    checks.append(_create_result(not failures, name="T i_X = i_X (theta (x) id)", failures=failures))
    if K.zeta.is_zero():
        checks.append(_create_result(False, error="central charge vanishes", name="zeta nonzero"))
    if isinstance(C, SkeletalCategory):
        ratio = gauss_sum_ratio(C)
        if ratio is not None:
            checks.append(_create_result(
                ratio == K.zeta, name="zeta = p+/D",
                zeta=K.zeta.to_string(), gauss_ratio=ratio.to_string(),
            ))
    success = all(c["success"] for c in checks)
    return _create_result(success, category=C.name, zeta=K.zeta.to_string(), checks=checks)


# ============================================================================
# Dinaturality
# ============================================================================

def _generators(C: RibbonCategory) -> List[ObjectExpr]:
    return list(C.coend_generators())


def dinaturality_objects(C: RibbonCategory, word_length: int = 2) -> List[ObjectExpr]:
    """Simples and their short words (skeletal), or the declared modules (Hopf)."""
    if isinstance(C, SkeletalCategory):
        out = []
        for n in range(1, word_length + 1):
            out.extend(ObjectExpr.of(*w) for w in itertools.product(C.simples, repeat=n))
        return out
    return [atom_expr(label) for label in sorted(C.composites) if label != "K"]


def check_dinaturality(C: RibbonCategory, word_length: int = 2) -> Dict[str, Any]:
    """i_Y (g (x) id_{Y^v}) = i_X (id_X (x) g^v) for every basis morphism g: X -> Y."""
    objects = dinaturality_objects(C, word_length)
    failures, checked = [], 0
    for X, Y in itertools.product(objects, repeat=2):
        for g in C.hom_space(X, Y):
            checked += 1
            lhs = C.compose(C.coend_inclusion(Y), C.tensor(g, C.identity(Y.dual())))
            rhs = C.compose(C.coend_inclusion(X), C.tensor(C.identity(X), C.dual_of_morphism(g)))
            if not lhs.equals_matrixwise(rhs):
                failures.append({"where": [str(X), str(Y)]})
    logger.info(f"[{C.name}] dinaturality: {checked} morphisms, {len(failures)} failures")
    return _create_result(not failures, name="dinaturality", checked=checked, failures=failures[:5])


# ============================================================================
# Backend Comparison
# ============================================================================

def _trace(m: Matrix):
    total = None
    for i in range(m.rows):
        v = m[(i, i)]
        total = v if total is None else total + v
    return total


def compare_coends(first: CoendK, second: CoendK, max_word: int = 3) -> Dict[str, Any]:
    """
    Compares S and T on Hom(1, K) through traces of all words in S, T up to max_word.

    The two coends live in different bases, so basis-independent data is compared.
    """
    mats = {name: (k.on_invariants("S"), k.on_invariants("T")) for name, k in (("first", first), ("second", second))}
    if mats["first"][0].rows != mats["second"][0].rows:
        return _create_result(False, error="Hom(1, K) dimensions differ",
                              dims=[mats["first"][0].rows, mats["second"][0].rows])
    mismatches = []
    for n in range(1, max_word + 1):
        for word in itertools.product("ST", repeat=n):
            traces = []
            for name in ("first", "second"):
                S, T = mats[name]
                m = Matrix.identity(S.rows, S.order)
                for letter in word:
                    m = m @ (S if letter == "S" else T)
                traces.append(_trace(m))
            if traces[0] != traces[1]:
                mismatches.append({"word": "".join(word), "traces": [t.to_string() for t in traces]})
    return _create_result(not mismatches, checked_words=max_word, mismatches=mismatches,
                          zeta=[first.zeta.to_string(), second.zeta.to_string()])
