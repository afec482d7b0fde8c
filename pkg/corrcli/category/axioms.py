#!/usr/bin/env python3
"""
Corr CLI - Category Axioms
Pentagon, hexagon, ribbon and Hopf-algebra checks with localized failures

Version: 1.0.0
"""

import itertools
from typing import Any, Callable, Dict, List, Tuple

from ..core.logging_config import logger
from ..scalars import FieldElement
from ..utils.helpers import _create_result
from .base import RibbonCategory, atom_expr
from .hopf import HopfCategory
from .skeletal import SkeletalCategory

# Failures kept per check; the first one is what the CLI prints.
MAX_REPORTED_FAILURES = 5


def _summarize(name: str, failures: List[Dict[str, Any]], checked: int) -> Dict[str, Any]:
    if failures:
        first = failures[0]
        return _create_result(
            False,
            error=f"{name} fails at {first.get('where')}",
            name=name,
            checked=checked,
            failures=failures[:MAX_REPORTED_FAILURES],
            failure_count=len(failures),
        )
    return _create_result(True, message=f"{name}: {checked} instances hold", name=name, checked=checked)


# ============================================================================
# Skeletal Checks
# ============================================================================

def _admissible(C: SkeletalCategory, a: str, b: str, c: str) -> bool:
    return bool(C.n_symbol(a, b, c))


def check_pentagon(C: SkeletalCategory) -> Dict[str, Any]:
    """F^{abx}_e[z,y] F^{zcd}_e[w,x] = sum_u F^{abc}_w[z,u] F^{aud}_e[w,y] F^{bcd}_y[u,x]."""
    failures, checked = [], 0
    S = C.simples
    for a, b, c, d, e in itertools.product(S, repeat=5):
        for z in C.fuse(a, b):
            for w in C.fuse(z, c):
                if not _admissible(C, w, d, e):
                    continue
                for x in C.fuse(c, d):
                    for y in C.fuse(b, x):
                        if not _admissible(C, a, y, e):
                            continue
                        checked += 1
                        lhs = C.f_symbol(a, b, x, e, z, y) * C.f_symbol(z, c, d, e, w, x)
                        rhs = FieldElement.zero(C.order)
                        for u in C.fuse(b, c):
                            rhs = rhs + (C.f_symbol(a, b, c, w, z, u) * C.f_symbol(a, u, d, e, w, y)
                                         * C.f_symbol(b, c, d, y, u, x))
                        if lhs != rhs:
                            failures.append({"where": [a, b, c, d, e], "channels": [z, w, x, y],
                                             "lhs": lhs.to_string(), "rhs": rhs.to_string()})
    return _summarize("pentagon", failures, checked)


def _hexagon_one(C: SkeletalCategory, a: str, b: str, c: str, d: str, u: str, f: str) -> Tuple[FieldElement, FieldElement]:
    total = FieldElement.zero(C.order)
    _, _, g_channels = C.f_matrix(b, c, a, d)
    e_channels = C.f_matrix(a, b, c, d)[1]
    for g in g_channels:
        for e in e_channels:
            total = total + (C.f_symbol(b, c, a, d, u, g) * C.r_symbol(a, c, g)
                             * C.f_inverse_symbol(b, a, c, d, g, e) * C.r_symbol(a, b, e)
                             * C.f_symbol(a, b, c, d, e, f))
    rhs = C.r_symbol(a, f, d) if u == f else FieldElement.zero(C.order)
    return total, rhs


def _hexagon_two(C: SkeletalCategory, a: str, b: str, c: str, d: str, u: str, e: str) -> Tuple[FieldElement, FieldElement]:
    total = FieldElement.zero(C.order)
    for g in C.f_matrix(a, c, b, d)[2]:
        total = total + (C.f_symbol(a, c, b, d, u, g) * C.r_symbol(b, c, g)
                         * C.f_inverse_symbol(a, b, c, d, g, e))
    total = C.r_symbol(a, c, u) * total
    rhs = C.r_symbol(e, c, d) * C.f_symbol(c, a, b, d, u, e)
    return total, rhs


def check_hexagons(C: SkeletalCategory) -> List[Dict[str, Any]]:
    results = []
    for name, fn, rows_of, cols_of in (
        ("hexagon_1", _hexagon_one, lambda a, b, c, d: C.f_matrix(b, c, a, d)[1],
         lambda a, b, c, d: C.f_matrix(a, b, c, d)[2]),
        ("hexagon_2", _hexagon_two, lambda a, b, c, d: C.f_matrix(a, c, b, d)[1],
         lambda a, b, c, d: C.f_matrix(a, b, c, d)[1]),
    ):
        failures, checked = [], 0
        for a, b, c, d in itertools.product(C.simples, repeat=4):
            for u in rows_of(a, b, c, d):
                for v in cols_of(a, b, c, d):
                    checked += 1
                    lhs, rhs = fn(C, a, b, c, d, u, v)
                    if lhs != rhs:
                        failures.append({"where": [a, b, c], "total": d, "channels": [u, v],
                                         "lhs": lhs.to_string(), "rhs": rhs.to_string()})
        results.append(_summarize(name, failures, checked))
    return results


def check_ribbon(C: SkeletalCategory) -> List[Dict[str, Any]]:
    """Double braiding against twists, self-dual twists and multiplicative pivots."""
    monodromy, duals, pivots = [], [], []
    checked = 0
    for a, b in itertools.product(C.simples, repeat=2):
        for c in C.fuse(a, b):
            checked += 1
            lhs = C.r_symbol(b, a, c) * C.r_symbol(a, b, c)
            rhs = C.topological_twist(c) / (C.topological_twist(a) * C.topological_twist(b))
            if lhs != rhs:
                monodromy.append({"where": [a, b, c], "lhs": lhs.to_string(), "rhs": rhs.to_string()})
            if C.pivot_coefficient(c) != C.pivot_coefficient(a) * C.pivot_coefficient(b):
                pivots.append({"where": [a, b, c]})
    for a in C.simples:
        if C.topological_twist(a) != C.topological_twist(C.duals[a]):
            duals.append({"where": [a, C.duals[a]]})
    unit_ok = C.topological_twist(C.unit_label).is_one()
    if not unit_ok:
        duals.insert(0, {"where": [C.unit_label], "reason": "unit twist is not 1"})
    return [
        _summarize("ribbon", monodromy, checked),
        _summarize("twist_dual", duals, len(C.simples)),
        _summarize("pivot_multiplicative", pivots, checked),
    ]


# ============================================================================
# Checks Through the Morphism Machinery
# ============================================================================

def check_zigzags(C: RibbonCategory, labels: List[str]) -> Dict[str, Any]:
    """(id (x) d)(b (x) id) = id_X and (d (x) id)(id (x) b) = id_{X^v}."""
    failures = []
    for label in labels:
        X = atom_expr(label)
        Xv = X.dual()
        first = C.chain(C.tensor(C.coev(X), C.identity(X)), C.tensor(C.identity(X), C.ev(X)))
        second = C.chain(C.tensor(C.identity(Xv), C.coev(X)), C.tensor(C.ev(X), C.identity(Xv)))
        if not first.equals_matrixwise(C.identity(X)):
            failures.append({"where": [label], "zigzag": "right"})
        if not second.equals_matrixwise(C.identity(Xv)):
            failures.append({"where": [label], "zigzag": "left"})
    return _summarize("zigzag", failures, 2 * len(labels))


def check_twist_duality(C: RibbonCategory, labels: List[str]) -> Dict[str, Any]:
    """(theta_X)^v = theta_{X^v}."""
    failures = []
    for label in labels:
        X = atom_expr(label)
        if not C.dual_of_morphism(C.twist(X)).equals_matrixwise(C.twist(X.dual())):
            failures.append({"where": [label]})
    return _summarize("twist_duality", failures, len(labels))


# ============================================================================
# Hopf Checks
# ============================================================================

TensorElement = Dict[Tuple[int, ...], FieldElement]


def _add(target: TensorElement, key: Tuple[int, ...], value: FieldElement) -> None:
    if value.is_zero():
        return
    prev = target.get(key)
    total = value if prev is None else prev + value
    if total.is_zero():
        target.pop(key, None)
    else:
        target[key] = total


def _from_vector(x: List[FieldElement]) -> TensorElement:
    return {(i,): v for i, v in enumerate(x) if not v.is_zero()}


def _mul(H: HopfCategory, x: TensorElement, y: TensorElement) -> TensorElement:
    """Slotwise product in H^{(x)n}."""
    out: TensorElement = {}
    for kx, a in x.items():
        for ky, b in y.items():
            slots = [H.mult.get((i, j), {}) for i, j in zip(kx, ky)]
            for combo in itertools.product(*(s.items() for s in slots)):
                coef = a * b
                for _, c in combo:
                    coef = coef * c
                _add(out, tuple(k for k, _ in combo), coef)
    return out


def _delta_at(H: HopfCategory, x: TensorElement, slot: int) -> TensorElement:
    out: TensorElement = {}
    for key, a in x.items():
        for j, k, c in H.comult.get(key[slot], ()):
            _add(out, key[:slot] + (j, k) + key[slot + 1:], a * c)
    return out


def _r_element(H: HopfCategory) -> TensorElement:
    out: TensorElement = {}
    for i, j, c in H.R:
        _add(out, (i, j), c)
    return out


def _embed(H: HopfCategory, x: TensorElement, slots: Tuple[int, ...], n: int) -> TensorElement:
    """Places a tensor into H^{(x)n} at the given slots, units elsewhere."""
    unit = [(u, v) for u, v in enumerate(H.unit_vec) if not v.is_zero()]
    out: TensorElement = {}
    free = [s for s in range(n) if s not in slots]
    for key, a in x.items():
        for fill in itertools.product(unit, repeat=len(free)):
            full = [0] * n
            coef = a
            for s, k in zip(slots, key):
                full[s] = k
            for s, (u, v) in zip(free, fill):
                full[s] = u
                coef = coef * v
            _add(out, tuple(full), coef)
    return out


def _hopf_identities(H: HopfCategory) -> Dict[str, Callable[[], List[Dict[str, Any]]]]:
    d = H.dim
    e = [_from_vector(H.basis_element(i)) for i in range(d)]
    unit = _from_vector(H.unit_vec)
    R = _r_element(H)
    v = _from_vector(H.ribbon)

    def associativity():
        return [{"where": [i, j, k]} for i, j, k in itertools.product(range(d), repeat=3)
                if _mul(H, _mul(H, e[i], e[j]), e[k]) != _mul(H, e[i], _mul(H, e[j], e[k]))]

    def unit_law():
        return [{"where": [i]} for i in range(d)
                if _mul(H, unit, e[i]) != e[i] or _mul(H, e[i], unit) != e[i]]

    def coassociativity():
        return [{"where": [i]} for i in range(d)
                if _delta_at(H, _delta_at(H, e[i], 0), 0) != _delta_at(H, _delta_at(H, e[i], 0), 1)]

    def counit_law():
        bad = []
        for i in range(d):
            left: TensorElement = {}
            right: TensorElement = {}
            for j, k, c in H.comult.get(i, ()):
                _add(left, (k,), H.counit[j] * c)
                _add(right, (j,), H.counit[k] * c)
            if left != e[i] or right != e[i]:
                bad.append({"where": [i]})
        return bad

    def bialgebra():
        return [{"where": [i, j]} for i, j in itertools.product(range(d), repeat=2)
                if _delta_at(H, _mul(H, e[i], e[j]), 0)
                != _mul(H, _delta_at(H, e[i], 0), _delta_at(H, e[j], 0))]

    def antipode_law():
        bad = []
        for i in range(d):
            left: TensorElement = {}
            right: TensorElement = {}
            for j, k, c in H.comult.get(i, ()):
                sj = _from_vector(H.apply_antipode(H.basis_element(j)))
                sk = _from_vector(H.apply_antipode(H.basis_element(k)))
                for key, val in _mul(H, sj, e[k]).items():
                    _add(left, key, c * val)
                for key, val in _mul(H, e[j], sk).items():
                    _add(right, key, c * val)
            expected = {key: val * H.counit[i] for key, val in unit.items() if not H.counit[i].is_zero()}
            if left != expected or right != expected:
                bad.append({"where": [i]})
        return bad

    def quasitriangular():
        bad = []
        for i in range(d):
            delta = _delta_at(H, e[i], 0)
            delta_op = {(k2, k1): c for (k1, k2), c in delta.items()}
            if _mul(H, delta_op, R) != _mul(H, R, delta):
                bad.append({"where": [i], "identity": "Delta^op R = R Delta"})
        r13, r23, r12 = _embed(H, R, (0, 2), 3), _embed(H, R, (1, 2), 3), _embed(H, R, (0, 1), 3)
        if _delta_at(H, R, 0) != _mul(H, r13, r23):
            bad.append({"where": ["R"], "identity": "(Delta (x) id) R = R13 R23"})
        if _delta_at(H, R, 1) != _mul(H, r13, r12):
            bad.append({"where": ["R"], "identity": "(id (x) Delta) R = R13 R12"})
        return bad

    def ribbon_element():
        bad = []
        for i in range(d):
            if _mul(H, v, e[i]) != _mul(H, e[i], v):
                bad.append({"where": [i], "identity": "v central"})
        if _from_vector(H.apply_antipode(H.ribbon)) != v:
            bad.append({"where": ["v"], "identity": "S(v) = v"})
        counit_v = FieldElement.zero(H.order)
        for i, c in enumerate(H.ribbon):
            counit_v = counit_v + c * H.counit[i]
        if not counit_v.is_one():
            bad.append({"where": ["v"], "identity": "eps(v) = 1"})
        r21 = {(j, i): c for (i, j), c in R.items()}
        lhs = _mul(H, _delta_at(H, v, 0), _mul(H, r21, R))
        vv = {(i, j): a * b for (i,), a in v.items() for (j,), b in v.items()}
        if lhs != vv:
            bad.append({"where": ["v"], "identity": "Delta(v) R21 R = v (x) v"})
        return bad

    def modules():
        bad = []
        for label in sorted(H.composites):
            problem = H.is_module(label)
            if problem:
                bad.append({"where": [label], "reason": problem})
        return bad

    return {
        "associativity": associativity,
        "unit": unit_law,
        "coassociativity": coassociativity,
        "counit": counit_law,
        "bialgebra": bialgebra,
        "antipode": antipode_law,
        "quasitriangular": quasitriangular,
        "ribbon_element": ribbon_element,
        "modules": modules,
    }


# ============================================================================
# Entry Point
# ============================================================================

def check_category_axioms(C: RibbonCategory) -> Dict[str, Any]:
    """
    Itemized axiom report; mathematical failures never raise.

    Returns:
        Dict with 'success', 'category', 'backend' and the list 'checks'
    """
    checks: List[Dict[str, Any]] = []
    if isinstance(C, SkeletalCategory):
        checks.append(check_pentagon(C))
        checks.extend(check_hexagons(C))
        checks.extend(check_ribbon(C))
        labels = list(C.simples)
    else:
        for name, fn in _hopf_identities(C).items():
            failures = fn()
            checks.append(_summarize(name, failures, C.dim))
        labels = [label for label in sorted(C.composites) if label != "K"]
    checks.append(check_zigzags(C, labels))
    checks.append(check_twist_duality(C, labels))

    success = all(c["success"] for c in checks)
    for c in checks:
        if not c["success"]:
            logger.info(f"[{C.name}] {c['error']}")
    logger.info(f"[{C.name}] category axioms: {'pass' if success else 'FAIL'}")
    return _create_result(success, category=C.name, backend=C.backend, checks=checks)
