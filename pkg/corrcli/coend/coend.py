#!/usr/bin/env python3
"""
Corr CLI - Coend
The coend K of a ribbon category with counit, integral, Q, S, T and antipode

Version: 1.0.0
"""

import time
from dataclasses import dataclass, replace
from typing import Any, Dict, List, Optional, Tuple

from ..category.base import RibbonCategory
from ..category.objects import Morphism, ObjectExpr
from ..core.errors import NoIntegral, NormalizationNotRepresentable, NotRepresentable, StructureMismatch
from ..core.logging_config import logger
from ..scalars import FieldElement, Matrix, sqrt_in_field


@dataclass(frozen=True)
class CoendK:
    """K with its structure morphisms; immutable once built."""

    category: RibbonCategory
    K: ObjectExpr
    counit: Morphism
    integral: Morphism
    product: Morphism
    Q: Morphism
    S: Morphism
    T: Morphism
    antipode: Morphism
    antipode_inv: Morphism
    zeta: FieldElement
    scale: FieldElement
    normalized: bool
    sign: int = 1
    integral_dim: int = 1

    def inclusion(self, X: ObjectExpr) -> Morphism:
        return self.category.coend_inclusion(X)

    def rescaled(self, factor) -> "CoendK":
        """Same data with the integral multiplied by factor; S and zeta follow linearly."""
        f = self.category.scalar(factor)
        return replace(
            self,
            integral=self.integral.scale(f),
            S=self.S.scale(f),
            zeta=self.zeta * f,
            scale=self.scale * f,
            normalized=self.normalized and f.is_one(),
        )

    def on_invariants(self, kind: str) -> Matrix:
        return self.category.on_invariants(coend_structure_morphism(self, kind))


# ============================================================================
# Families Defining the Structure
# ============================================================================

def _counit_family(C: RibbonCategory):
    return lambda gens: C.ev_tilde(gens[0])


def _twist_family(C: RibbonCategory):
    def family(gens: List[ObjectExpr]) -> Morphism:
        X = gens[0]
        return C.compose(C.coend_inclusion(X), C.tensor(C.twist(X), C.identity(X.dual())))
    return family


def _q_family(C: RibbonCategory):
    """(i_X (x) i_Y) o (id_X (x) c_{Y,X^v} c_{X^v,Y} (x) id_{Y^v})."""
    def family(gens: List[ObjectExpr]) -> Morphism:
        X, Y = gens
        Xv = X.dual()
        monodromy = C.compose(C.braiding(Y, Xv), C.braiding(Xv, Y))
        inner = C.whisker(X, monodromy, Y.dual())
        return C.compose(C.tensor(C.coend_inclusion(X), C.coend_inclusion(Y)), inner)
    return family


def _product_family(C: RibbonCategory):
    """i_{X (x) Y} o (id_X (x) c_{X^v, Y (x) Y^v})."""
    def family(gens: List[ObjectExpr]) -> Morphism:
        X, Y = gens
        Xv = X.dual()
        swap = C.whisker(X, C.braiding(Xv, Y @ Y.dual()), ObjectExpr.unit())
        return C.compose(C.coend_inclusion(X @ Y), swap)
    return family


def _antipode_inv_family(C: RibbonCategory):
    """i_{X^v} o (id_{X^v} (x) pi_X theta_X) o c_{X,X^v}."""
    def family(gens: List[ObjectExpr]) -> Morphism:
        X = gens[0]
        Xv = X.dual()
        twisted = C.compose(C.pivot(X), C.twist(X))
        return C.chain(C.braiding(X, Xv), C.tensor(C.identity(Xv), twisted), C.coend_inclusion(Xv))
    return family


# ============================================================================
# Maps Through a Handle
# ============================================================================

def _from_left_factor(C: RibbonCategory, U: ObjectExpr, g: Morphism) -> Morphism:
    """U (x) K -> cod from g: K -> U^v (x) cod, contracting U with ev~_U."""
    cod = g.cod[len(U):]
    return C.chain(C.whisker(U, g, ObjectExpr.unit()), C.whisker(ObjectExpr.unit(), C.ev_tilde(U), cod))


def slide_through_handle(K: CoendK, U: ObjectExpr) -> Morphism:
    """
    U (x) K -> K (x) U, the word U carried through the handle.

    On generators u (x) i_X(x (x) x') goes to i_{U (x) X}(u (x) x (x) x' (x) u'') (x) u'
    where u'' (x) u' = coev~_U.
    """
    C = K.category
    if U.is_unit():
        return C.identity(K.K)
    Uv = U.dual()

    def family(gens: List[ObjectExpr]) -> Morphism:
        X = gens[0]
        opened = C.tensor_all([C.coev_tilde(U), C.identity(X @ X.dual()), C.coev_tilde(U)])
        return C.compose(C.whisker(Uv, C.coend_inclusion(U @ X), U), opened)

    return _from_left_factor(C, U, C.coend_from_family(1, Uv @ K.K @ U, family))


def twist_around_handle(K: CoendK, U: ObjectExpr, inverse: bool = False) -> Morphism:
    """U (x) K -> U (x) K with u (x) i_X(x (x) x') -> (theta_{U (x) X}(u (x) x)) (x) x'."""
    C = K.category
    if U.is_unit():
        return C.inverse(K.T) if inverse else K.T
    Uv = U.dual()

    def family(gens: List[ObjectExpr]) -> Morphism:
        X = gens[0]
        theta = C.twist_inv(U @ X) if inverse else C.twist(U @ X)
        opened = C.tensor(C.coev_tilde(U), C.identity(X @ X.dual()))
        included = C.whisker(Uv @ U, C.coend_inclusion(X), ObjectExpr.unit())
        return C.chain(opened, C.whisker(Uv, theta, X.dual()), included)

    return _from_left_factor(C, U, C.coend_from_family(1, Uv @ U @ K.K, family))


# ============================================================================
# Integral
# ============================================================================

def _flatten(morphisms: List[Morphism], order: int) -> Matrix:
    """One column per morphism, rows indexed by (sector, entry) over all blocks."""
    row_index: Dict[Any, int] = {}
    entries = {}
    for j, f in enumerate(morphisms):
        for sector in sorted(f.blocks):
            for (r, c), v in f.blocks[sector].entries.items():
                key = (sector, r, c)
                i = row_index.setdefault(key, len(row_index))
                entries[(i, j)] = v
    return Matrix(max(len(row_index), 1), len(morphisms), entries, order)


def solve_integral(C: RibbonCategory, K: ObjectExpr, product: Morphism,
                   counit: Morphism) -> Tuple[Morphism, int]:
    """
    Nonzero Lambda: 1 -> K with m(id (x) Lambda) = Lambda eps = m(Lambda (x) id).

    Returns the first basis vector of the solution space and its dimension;
    a dimension above one means the integral is not unique up to scale.

    Raises:
        NoIntegral: if the two-sided integral equations have only the zero solution
    """
    n = C.invariants_dim(K)
    basis = [C.from_vector(K, [1 if k == j else 0 for k in range(n)]) for j in range(n)]
    idK = C.identity(K)
    left, right = [], []
    for u in basis:
        ue = C.compose(u, counit)
        left.append(C.compose(product, C.tensor(idK, u)) - ue)
        right.append(C.compose(product, C.tensor(u, idK)) - ue)
    system = Matrix.vstack([_flatten(left, C.order), _flatten(right, C.order)], C.order)
    null = system.nullspace()
    if null.cols == 0:
        raise NoIntegral(f"{C.name}: the coend has no nonzero two-sided integral", {"category": C.name})
    if null.cols > 1:
        logger.warning(f"[{C.name}] integral space has dimension {null.cols}; using the first solution")
    return C.from_vector(K, null.col_values(0)), null.cols


# ============================================================================
# Build
# ============================================================================

def _proportionality(lhs: Morphism, rhs: Morphism) -> Optional[FieldElement]:
    """c with lhs = c * rhs, or None."""
    for sector in sorted(rhs.blocks):
        entries = rhs.blocks[sector].entries
        if entries:
            key = min(entries)
            c = lhs.blocks[sector][key] / entries[key]
            return c if lhs.equals_matrixwise(rhs.scale(c)) else None
    return None


def scalar_of(C: RibbonCategory, f: Morphism) -> FieldElement:
    """The number represented by an endomorphism of the unit."""
    return C.to_vector(f)[0]


def _s_from(C: RibbonCategory, K: ObjectExpr, counit: Morphism, Q: Morphism, integral: Morphism) -> Morphism:
    """S = (eps (x) id) o Q o (id (x) Lambda)."""
    idK = C.identity(K)
    return C.chain(C.tensor(idK, integral), Q, C.tensor(counit, idK))


def build_coend_K(C: RibbonCategory, sign: int = 1) -> CoendK:
    """
    Builds and normalizes the coend of C.

    Lambda is rescaled so that S^2 equals the inverse antipode; the remaining
    sign makes the first nonzero coordinate of Lambda positive (sign=-1 flips it).

    Raises:
        NoIntegral: no nonzero integral exists
        NormalizationNotRepresentable: the rescaling needs a square root outside the field
    """
    start = time.perf_counter()
    K = C.coend_object()
    counit = C.coend_from_family(1, C.unit(), _counit_family(C))
    T = C.coend_from_family(1, K, _twist_family(C))
    Q = C.coend_from_family(2, K @ K, _q_family(C))
    product = C.coend_from_family(2, K, _product_family(C))
    antipode_inv = C.coend_from_family(1, K, _antipode_inv_family(C))
    antipode = C.inverse(antipode_inv)
    logger.debug(f"[{C.name}] coend structure families solved")

    raw, integral_dim = solve_integral(C, K, product, counit)
    S0 = _s_from(C, K, counit, Q, raw)
    c = _proportionality(C.compose(S0, S0), antipode_inv)
    one = FieldElement.one(C.order)
    if c is None or c.is_zero():
        logger.warning(f"[{C.name}] S^2 is not proportional to the inverse antipode; integral left unnormalized")
        scale, normalized = one, False
    else:
        try:
            scale = sqrt_in_field(c).inverse()
        except NotRepresentable as e:
            raise NormalizationNotRepresentable(
                f"{C.name}: normalizing the integral needs sqrt({c.to_string()}); "
                f"enlarge cyclotomic_order",
                {"value": c.to_string(), "order": C.order},
            ) from e
        normalized = True

    coords = C.to_vector(raw.scale(scale))
    leading = next((v for v in coords if not v.is_zero()), one)
    if leading.leading_sign() < 0:
        scale = -scale
    if sign < 0:
        scale = -scale

    integral = raw.scale(scale)
    S = S0.scale(scale)
    zeta = scalar_of(C, C.chain(integral, T, counit))
    logger.info(f"[{C.name}] coend built in {time.perf_counter() - start:.2f}s, zeta = {zeta}, "
                f"normalized = {normalized}")
    return CoendK(C, K, counit, integral, product, Q, S, T, antipode, antipode_inv,
                  zeta, scale, normalized, sign, integral_dim)


def coend_structure_morphism(K: CoendK, kind: str) -> Morphism:
    """
    Stored structure morphism by kind; S is recomputed and must match.

    Raises:
        StructureMismatch: the stored S differs from (eps (x) id) o Q o (id (x) Lambda)
        ValueError: unknown kind
    """
    C = K.category

    def recomputed_s() -> Morphism:
        S = _s_from(C, K.K, K.counit, K.Q, K.integral)
        if not S.equals_matrixwise(K.S):
            raise StructureMismatch(f"{C.name}: recomputed S differs from the stored matrix",
                                    {"first_difference": S.first_difference(K.S)})
        return S

    handlers = {
        "counit": lambda: K.counit,
        "integral": lambda: K.integral,
        "Q": lambda: K.Q,
        "S": recomputed_s,
        "T": lambda: K.T,
        "antipode": lambda: K.antipode,
        "antipode_inv": lambda: K.antipode_inv,
        "product": lambda: K.product,
    }
    if kind not in handlers:
        raise ValueError(f"Unknown coend structure morphism: {kind}")
    return handlers[kind]()


def central_charge(K: CoendK) -> FieldElement:
    return K.zeta
