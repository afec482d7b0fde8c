#!/usr/bin/env python3
"""
Corr CLI - Frobenius Checks
Algebra axioms, self-duality conditions and modularity of Frobenius data

Version: 1.0.0
"""

from typing import Any, Callable, Dict, List, Tuple

from ..category.constructions import PRODUCT_SEPARATOR
from ..category.objects import Morphism
from ..coend.coend import CoendK
from ..core.errors import CategoryNotModular
from ..core.logging_config import logger
from ..scalars import Matrix
from ..utils.helpers import _create_result
from .data import FrobeniusData, phi_from_form


def _equal(name: str, lhs: Morphism, rhs: Morphism) -> Dict[str, Any]:
    if lhs.equals_matrixwise(rhs):
        return _create_result(True, name=name)
    return _create_result(False, error=f"{name} fails", name=name, first_difference=lhs.first_difference(rhs))


def _axioms(A: FrobeniusData) -> List[Tuple[str, Callable[[], Dict[str, Any]]]]:
    C, F = A.category, A.F
    idF = C.identity(F)
    m, eta, Delta, eps = A.m, A.eta, A.Delta, A.eps
    cFF = C.braiding(F, F)

    chain = C.chain

    def omega_contractions() -> Dict[str, Any]:
        first = C.compose(C.tensor_all([eps, idF, idF]), A.omega)
        second = C.compose(C.tensor_all([idF, eps, idF]), A.omega)
        third = C.compose(C.tensor_all([idF, idF, eps]), A.omega)
        results = [_equal("first = second", first, second), _equal("second = third", second, third)]
        ok = all(r["success"] for r in results)
        return _create_result(ok, name="counit contractions of omega agree",
                              details=[r for r in results if not r["success"]])

    def omega_braiding() -> Dict[str, Any]:
        left = C.compose(C.tensor(cFF, idF), A.omega)
        right = C.compose(C.tensor(idF, cFF), A.omega)
        results = [_equal("(c (x) id) omega = omega", left, A.omega),
                   _equal("(id (x) c) omega = omega", right, A.omega)]
        return _create_result(all(r["success"] for r in results), name="omega is braid invariant",
                              details=[r for r in results if not r["success"]])

    def phi_invertible() -> Dict[str, Any]:
        product = C.compose(A.Phi_inv, A.Phi)
        return _equal("Phi invertible", product, idF)

    def symmetry() -> Dict[str, Any]:
        Fv = F.dual()
        other = C.compose(C.tensor(C.identity(Fv), A.kappa), C.tensor(C.coev_tilde(F), idF))
        return _equal("symmetric Frobenius form", other, A.Phi)

    def given_coproduct() -> Dict[str, Any]:
        if A.Delta_given is None:
            return _create_result(True, name="supplied coproduct matches the form", skipped=True)
        return _equal("supplied coproduct matches the form", A.Delta_given, Delta)

    return [
        ("associativity", lambda: _equal(
            "associativity", chain(C.tensor(m, idF), m), chain(C.tensor(idF, m), m))),
        ("unit", lambda: _both("unit", chain(C.tensor(eta, idF), m), chain(C.tensor(idF, eta), m), idF)),
        ("coassociativity", lambda: _equal(
            "coassociativity", chain(Delta, C.tensor(Delta, idF)), chain(Delta, C.tensor(idF, Delta)))),
        ("counit", lambda: _both("counit", chain(Delta, C.tensor(eps, idF)), chain(Delta, C.tensor(idF, eps)), idF)),
        ("frobenius", lambda: _frobenius(A)),
        ("phi_invertible", phi_invertible),
        ("dual_multiplication", lambda: _equal(
            "m^v = (Phi (x) Phi) Delta Phi^-1",
            C.dual_of_morphism(m), chain(A.Phi_inv, Delta, C.tensor(A.Phi, A.Phi)))),
        ("dual_unit", lambda: _equal("eta^v = eps Phi^-1", C.dual_of_morphism(eta), chain(A.Phi_inv, eps))),
        ("commutativity", lambda: _equal("commutativity", chain(cFF, m), m)),
        ("cocommutativity", lambda: _equal("cocommutativity", chain(Delta, cFF), Delta)),
        ("symmetry", symmetry),
        ("trivial_twist", lambda: _equal("trivial twist", C.twist(F), idF)),
        ("frobenius_schur", lambda: _equal(
            "Phi^v pi_F = Phi", C.compose(C.dual_of_morphism(A.Phi), C.pivot(F)), A.Phi)),
        ("omega_braid_invariance", omega_braiding),
        ("omega_counit_contractions", omega_contractions),
        ("frobenius_form", lambda: _equal(
            "kappa = d_F (Phi (x) id)", C.compose(C.ev(F), C.tensor(A.Phi, idF)), A.kappa)),
        ("phi_from_form", lambda: _equal("Phi from kappa", phi_from_form(C, F, A.kappa), A.Phi)),
        ("supplied_coproduct", given_coproduct),
    ]


def _both(name: str, left: Morphism, right: Morphism, expected: Morphism) -> Dict[str, Any]:
    results = [_equal(f"left {name}", left, expected), _equal(f"right {name}", right, expected)]
    return _create_result(all(r["success"] for r in results), name=name,
                          details=[r for r in results if not r["success"]])


def _frobenius(A: FrobeniusData) -> Dict[str, Any]:
    C, F = A.category, A.F
    idF = C.identity(F)
    middle = C.compose(A.Delta, A.m)
    left = C.compose(C.tensor(A.m, idF), C.tensor(idF, A.Delta))
    right = C.compose(C.tensor(idF, A.m), C.tensor(A.Delta, idF))
    results = [_equal("(m (x) id)(id (x) Delta) = Delta m", left, middle),
               _equal("(id (x) m)(Delta (x) id) = Delta m", right, middle)]
    return _create_result(all(r["success"] for r in results), name="frobenius",
                          details=[r for r in results if not r["success"]])


def check_axioms(A: FrobeniusData) -> Dict[str, Any]:
    """Runs every axiom; failures are itemized, never raised."""
    checks = []
    for key, run in _axioms(A):
        result = run()
        result["check"] = key
        checks.append(result)
        if not result["success"]:
            logger.info(f"[{A.name}] axiom {key} fails")
    failed = [c["check"] for c in checks if not c["success"]]
    if failed:
        return _create_result(False, error=f"{A.name}: {len(failed)} axiom(s) fail: {', '.join(failed)}",
                              algebra=A.summary(), checks=checks, failed=failed)
    return _create_result(True, message=f"{A.name}: all {len(checks)} axioms hold",
                          algebra=A.summary(), checks=checks, failed=[])


# ============================================================================
# Modularity
# ============================================================================

def modular_vector(A: FrobeniusData, K: CoendK) -> Morphism:
    """v = i_F o (id_F (x) Phi) o Delta: F -> K."""
    C = A.category
    return C.chain(A.Delta, C.tensor(C.identity(A.F), A.Phi), C.coend_inclusion(A.F))


def _require_modular(K: CoendK) -> None:
    for sector, block in K.S.blocks.items():
        if block.rows and not block.is_invertible():
            raise CategoryNotModular(f"{K.category.name} is not modular: S_K is singular", {"sector": sector})


def check_modular(A: FrobeniusData, K: CoendK) -> Dict[str, Any]:
    """
    Tests S_K o v = v exactly and reports the residual S_K o v - v.

    Raises:
        CategoryNotModular: S_K is not invertible
    """
    _require_modular(K)
    C = A.category
    v = modular_vector(A, K)
    Sv = C.compose(K.S, v)
    residual = Sv - v
    modular = residual.is_zero()
    logger.info(f"[{A.name}] modular: {modular}")
    report = {
        "modular": modular,
        "algebra": A.summary(),
        "residual": residual.to_json(),
        "zeta": K.zeta.to_string(),
        "normalized": K.normalized,
    }
    if modular:
        return _create_result(True, message=f"{A.name} is a modular Frobenius algebra", **report)
    return _create_result(False, error=f"{A.name} is not modular: S_K v differs from v",
                          first_difference=Sv.first_difference(v), **report)


def modular_invariant(A: FrobeniusData) -> Dict[str, Any]:
    """Z_ij = multiplicity of i.j among the summands of F, for algebras on a Deligne product."""
    C = A.category
    factors = getattr(C, "factors", None)
    summands = C.composites.get(A.F.atoms[0].label) if len(A.F) == 1 else None
    if not factors or summands is None:
        return _create_result(False, error="modular invariant needs F on a Deligne product")
    left, right = factors
    entries = {}
    for word in summands:
        if len(word) != 1:
            return _create_result(False, error="modular invariant needs simple summands")
        a, b = word[0].split(PRODUCT_SEPARATOR, 1)
        key = (left.simples.index(a), right.simples.index(b))
        entries[key] = entries.get(key, 0) + 1
    counts = Matrix(len(left.simples), len(right.simples), entries, C.order)
    return _create_result(True, rows=left.simples, cols=right.simples, Z=counts.to_json())
