#!/usr/bin/env python3
"""
Corr CLI - Frobenius Data
Algebra structure on the bulk object and the generator triple (omega, eps, Phi)

Version: 1.0.0
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from ..category.base import RibbonCategory
from ..category.objects import Morphism, ObjectExpr
from ..core.errors import NotInvertible, ShapeMismatch
from ..core.logging_config import logger


@dataclass(frozen=True)
class FrobeniusData:
    """
    (m, eta, Delta, eps) on F together with the derived omega, Phi and kappa.

    kappa = eps o m is the Frobenius form and Phi: F -> F^v its partial
    transpose; omega is the three-point vector (Delta (x) id) Delta eta.
    """

    category: RibbonCategory
    F: ObjectExpr
    m: Morphism
    eta: Morphism
    Delta: Morphism
    eps: Morphism
    Phi: Morphism
    Phi_inv: Morphism
    omega: Morphism
    kappa: Morphism
    name: str = "algebra"
    Delta_given: Optional[Morphism] = None

    def to_generators(self) -> Tuple[Morphism, Morphism, Morphism]:
        """(omega, eps, Phi)."""
        return self.omega, self.eps, self.Phi

    def summary(self):
        C = self.category
        return {
            "name": self.name,
            "object": str(self.F),
            "dim_hom_1_F": C.invariants_dim(self.F),
            "dim_hom_1_FFF": C.invariants_dim(self.F.power(3)),
        }


def _check_shape(f: Morphism, dom: ObjectExpr, cod: ObjectExpr, what: str) -> None:
    if f.dom != dom or f.cod != cod:
        raise ShapeMismatch(f"{what} must be {dom} -> {cod}, got {f.describe()}")


def _invert(C: RibbonCategory, Phi: Morphism) -> Morphism:
    for sector, block in Phi.blocks.items():
        if block.rows != block.cols or not block.is_invertible():
            raise NotInvertible("Phi is not invertible: the Frobenius form is degenerate", {"sector": sector})
    return C.inverse(Phi)


def phi_from_form(C: RibbonCategory, F: ObjectExpr, kappa: Morphism) -> Morphism:
    """Phi = (kappa (x) id_{F^v}) o (id_F (x) b_F)."""
    return C.compose(C.tensor(kappa, C.identity(F.dual())), C.tensor(C.identity(F), C.coev(F)))


def omega_from(C: RibbonCategory, F: ObjectExpr, eta: Morphism, Delta: Morphism) -> Morphism:
    return C.chain(eta, Delta, C.tensor(Delta, C.identity(F)))


def from_algebra(C: RibbonCategory, F: ObjectExpr, m: Morphism, eta: Morphism, eps: Morphism,
                 Delta: Optional[Morphism] = None, name: str = "algebra") -> FrobeniusData:
    """
    Completes (m, eta, eps) to Frobenius data; Delta is derived from the form.

    A supplied Delta is kept for comparison by check_axioms.

    Raises:
        ShapeMismatch: a tensor has the wrong source or target
        NotInvertible: the form eps o m is degenerate
    """
    FF, unit = F @ F, C.unit()
    _check_shape(m, FF, F, "m")
    _check_shape(eta, unit, F, "eta")
    _check_shape(eps, F, unit, "eps")
    if Delta is not None:
        _check_shape(Delta, F, FF, "Delta")
    kappa = C.compose(eps, m)
    Phi = phi_from_form(C, F, kappa)
    Phi_inv = _invert(C, Phi)
    gamma = C.compose(C.tensor(C.identity(F), Phi_inv), C.coev(F))
    derived = C.compose(C.tensor(m, C.identity(F)), C.tensor(C.identity(F), gamma))
    omega = omega_from(C, F, eta, derived)
    logger.debug(f"Frobenius data {name} on {F}: coproduct derived from the form")
    return FrobeniusData(C, F, m, eta, derived, eps, Phi, Phi_inv, omega, kappa, name, Delta)


def from_generators(C: RibbonCategory, F: ObjectExpr, omega: Morphism, eps: Morphism, Phi: Morphism,
                    name: str = "generators") -> FrobeniusData:
    """
    Rebuilds (m, eta, Delta) from the three-point vector, the counit and Phi.

    Delta = (id (x) id (x) d_F (Phi (x) id)) o (omega (x) id)
    eta   = (eps (x) eps (x) id) o omega
    m     = (id (x) d_{F(x)F} (Phi (x) Phi (x) id (x) id)) o (omega (x) id (x) id)

    The product keeps the first leg of omega and pairs the other two with
    the inputs; no cyclic symmetry of omega is assumed.
    """
    FF, unit = F @ F, C.unit()
    _check_shape(omega, unit, F.power(3), "omega")
    _check_shape(eps, F, unit, "eps")
    _check_shape(Phi, F, F.dual(), "Phi")
    Phi_inv = _invert(C, Phi)
    idF = C.identity(F)
    kappa = C.compose(C.ev(F), C.tensor(Phi, idF))
    Delta = C.compose(C.tensor(C.identity(FF), kappa), C.tensor(omega, idF))
    eta = C.compose(C.tensor_all([eps, eps, idF]), omega)
    pairing = C.compose(C.ev(FF), C.tensor_all([Phi, Phi, C.identity(FF)]))
    m = C.compose(C.tensor(idF, pairing), C.tensor(omega, C.identity(FF)))
    return FrobeniusData(C, F, m, eta, Delta, eps, Phi, Phi_inv, omega, C.compose(eps, m), name)
