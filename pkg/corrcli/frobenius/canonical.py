#!/usr/bin/env python3
"""
Corr CLI - Canonical Algebra
The Cardy-type algebra F = (+)_a a.a^v on a Deligne product C (x) C^rev

Version: 1.0.0
"""

from typing import Dict, List, Tuple

from ..category.constructions import product_label
from ..category.objects import ObjectExpr
from ..category.skeletal import SkeletalCategory
from ..core.errors import DataFormatError
from ..core.logging_config import logger
from ..scalars import FieldElement, as_field
from .data import FrobeniusData, from_algebra
from .tensors import summand_morphism

# (dom summand choice, cod summand choice, value) as read by summand_morphism
Entry = Tuple[Tuple[int, ...], Tuple[int, ...], FieldElement]


def _factors(C: SkeletalCategory) -> Tuple[SkeletalCategory, SkeletalCategory]:
    factors = getattr(C, "factors", None)
    if not factors:
        raise DataFormatError(f"{C.name} is not a Deligne product; no canonical algebra")
    left, right = factors
    missing = [a for a in left.simples if a not in right.simples]
    if missing:
        raise DataFormatError("The factors of a canonical algebra must share their simple labels",
                              {"missing": missing})
    return left, right


def multiplication_coefficient(D: SkeletalCategory, a: str, b: str, c: str) -> FieldElement:
    """
    Coefficient of the product (a.a^v) (x) (b.b^v) -> c.c^v in the second factor.

    It is the single entry of t^v o c_{a^v, b^v} in the sector c^v, where t is
    the basis vector of Hom(c, a (x) b).
    """
    t = D._basis_morphism(ObjectExpr.of(c), ObjectExpr.of(a, b), c, 0, 0)
    composite = D.compose(D.dual_of_morphism(t), D.braiding(ObjectExpr.of(a).dual(), ObjectExpr.of(b).dual()))
    return composite.blocks[D.duals[c]][0, 0]


def canonical_entries(C: SkeletalCategory) -> Dict[str, List[Entry]]:
    left, right = _factors(C)
    index = {a: i for i, a in enumerate(left.simples)}
    one = FieldElement.one(C.order)
    product: List[Entry] = []
    for a in left.simples:
        for b in left.simples:
            for c in left.fuse(a, b):
                mu = as_field(multiplication_coefficient(right, a, b, c), C.order)
                product.append(((index[a], index[b]), (index[c],), mu))
    unit = index[left.unit_label]
    return {
        "m": product,
        "eta": [((), (unit,), one)],
        "eps": [((unit,), (), one)],
    }


def canonical_algebra(C: SkeletalCategory, name: str = "canonical", label: str = "F") -> FrobeniusData:
    """
    F = (+)_a a.a^v with the product read off the braiding of the second factor.

    Raises:
        DataFormatError: C is not a Deligne product of factors with matching labels
    """
    left, right = _factors(C)
    F = C.register_object(label, [[product_label(a, right.duals[a])] for a in left.simples])
    entries = canonical_entries(C)
    unit = C.unit()
    m = summand_morphism(C, F @ F, F, entries["m"])
    eta = summand_morphism(C, unit, F, entries["eta"])
    eps = summand_morphism(C, F, unit, entries["eps"])
    logger.info(f"[{C.name}] canonical algebra on {len(left.simples)} summands")
    return from_algebra(C, F, m, eta, eps, name=name)
