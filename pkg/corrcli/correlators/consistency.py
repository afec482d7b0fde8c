#!/usr/bin/env python3
"""
Corr CLI - Correlator Consistency
Closed formula against cut-and-sew, move and relation invariance, S-invariance, non-degeneracy

Version: 1.0.0
"""

import itertools
from typing import Any, Dict, Iterator, List, Optional, Sequence

from ..blocks.matrices import move_matrix, word_matrix
from ..blocks.space import BlockFunctor
from ..checks.executor import run_checks
from ..core.config import DEFAULT_MAX_GENUS, DEFAULT_MAX_HOLES
from ..core.errors import CategoryNotModular, CorrError
from ..core.logging_config import logger
from ..frobenius.checks import check_axioms, check_modular
from ..frobenius.data import from_generators, phi_from_form
from ..scalars import Matrix
from ..surfaces.marking import FineMarking, one_holed_torus, standard_marking
from ..surfaces.moves import Move, candidate_moves
from ..surfaces.relations import relation_instances, relation_names
from ..surfaces.surface import IN, OUT
from ..utils.helpers import _create_result
from .system import CorrelatorSystem
from .vectors import correlator_vector, sewn_vector


def _compare(name: str, lhs: Matrix, rhs: Matrix, **extra) -> Dict[str, Any]:
    if lhs == rhs:
        return _create_result(True, name=name, **extra)
    return _create_result(False, error=f"{name}: vectors differ", name=name,
                          first_difference=lhs.first_difference(rhs), **extra)


def _surface_label(M: FineMarking) -> str:
    comp = M.surface.components[0]
    signs = "".join("+" if b.orientation == OUT else "-" for b in comp.boundary)
    return f"g{comp.genus}[{signs}]"


# ============================================================================
# Scope
# ============================================================================

def scope_markings(max_genus: int = DEFAULT_MAX_GENUS, max_holes: int = DEFAULT_MAX_HOLES,
                   all_orientations: bool = False) -> Iterator[FineMarking]:
    """
    Standard markings of connected surfaces within the scope.

    By default the orientation patterns are (in^p, out^q); all_orientations
    adds every interleaving, at a much higher transport cost.
    """
    for g in range(max_genus + 1):
        for n in range(0 if g else 1, max_holes + 1):
            if all_orientations:
                patterns = itertools.product((IN, OUT), repeat=n)
            else:
                patterns = ((IN,) * p + (OUT,) * (n - p) for p in range(n + 1))
            for eps in patterns:
                yield standard_marking(n, list(eps), genus=g)


# ============================================================================
# Per-Surface Checks
# ============================================================================

def closed_versus_sewn(S: CorrelatorSystem, bf: BlockFunctor, M: FineMarking) -> Dict[str, Any]:
    """The closed formula and the sewn elementary correlators give the same vector."""
    sewn, N = sewn_vector(S, bf, M)
    return _compare("closed formula = sewn elementary correlators", sewn, correlator_vector(S, bf, N),
                    cuts=len(M.cuts))


def _surface_moves(M: FineMarking) -> List[Move]:
    moves = candidate_moves(M, kinds=("Z", "B", "F", "A"))
    for c in M.cuts:
        if c.frame is not None:
            moves += [Move.s(c.id), Move.t(c.id)]
    return moves


def move_invariance(S: CorrelatorSystem, bf: BlockFunctor, M: FineMarking) -> Dict[str, Any]:
    """Every move at M maps the correlator of M to the correlator of the moved marking."""
    v = correlator_vector(S, bf, M)
    failures = []
    moves = _surface_moves(M)
    for mv in moves:
        matrix, N = move_matrix(bf, M, mv)
        result = _compare(str(mv), matrix @ v, correlator_vector(S, bf, N))
        if not result["success"]:
            failures.append(result)
    if failures:
        return _create_result(False, error=f"{len(failures)} of {len(moves)} moves break invariance",
                              name="move invariance", failures=failures)
    return _create_result(True, name="move invariance", moves=len(moves))


def check_surface(S: CorrelatorSystem, bf: BlockFunctor, M: FineMarking) -> Dict[str, Any]:
    label = _surface_label(M)
    parts = []
    for run in (closed_versus_sewn, move_invariance):
        try:
            parts.append(run(S, bf, M))
        except (CorrError, ValueError) as e:
            message = e.message if isinstance(e, CorrError) else str(e)
            parts.append(_create_result(False, error=f"{run.__name__}: {message}", name=run.__name__))
    failed = [p for p in parts if not p["success"]]
    return _create_result(not failed, name=label, dim=bf.dim(M), checks=parts,
                          error=failed[0]["error"] if failed else None)


# ============================================================================
# Global Checks
# ============================================================================

def relation_invariance(S: CorrelatorSystem, bf: BlockFunctor, max_genus: int, max_holes: int,
                        include_w13: bool = False) -> Dict[str, Any]:
    """Both sides of every bundled relation instance act identically on the correlator."""
    results, skipped = [], []
    for name in relation_names(include_w13):
        for inst in relation_instances(name):
            surface = inst.marking.surface
            holes = len(surface.boundary_ids())
            if surface.genus() > max_genus or holes > max_holes:
                skipped.append({"name": inst.name, "reason": "outside the verification scope"})
                continue
            try:
                v = correlator_vector(S, bf, inst.marking)
                lhs, path = word_matrix(bf, inst.marking, inst.lhs)
                rhs, _ = word_matrix(bf, inst.marking, inst.rhs)
                result = _compare(inst.name, lhs @ v, rhs @ v)
                if result["success"] and path[-1].same_as(inst.marking, ignore_central=True):
                    result = _compare(inst.name, lhs @ v, v)
            except CorrError as e:
                result = _create_result(False, error=f"{inst.name}: {e.message}", name=inst.name)
            results.append(result)
    failed = [r for r in results if not r["success"]]
    return _create_result(not failed, name="relation invariance", results=results, skipped=skipped,
                          error=f"{len(failed)} relation instance(s) break invariance" if failed else None)


def s_invariance(S: CorrelatorSystem, bf: BlockFunctor) -> Dict[str, Any]:
    """Modularity of A and invariance of the one-holed torus correlator under S."""
    try:
        modular = check_modular(S.A, S.coend)
    except CategoryNotModular as e:
        return _create_result(False, error=e.message, name="S invariance")
    M = one_holed_torus(IN)
    cid = M.cuts[0].id
    matrix, N = move_matrix(bf, M, Move.s(cid))
    torus = _compare("S on the one-holed torus", matrix @ correlator_vector(S, bf, M), correlator_vector(S, bf, N))
    ok = modular["success"] and torus["success"]
    return _create_result(ok, name="S invariance", modular=modular, torus=torus,
                          error=None if ok else (modular.get("error") or torus.get("error")))


def nondegeneracy(S: CorrelatorSystem) -> Dict[str, Any]:
    """The cylinder correlator v^0_{1|1} is the identity of F, hence invertible."""
    C = S.category
    cylinder = S.correlator(0, 1, 1)
    identity = C.identity(S.F)
    if cylinder.equals_matrixwise(identity):
        return _create_result(True, name="non-degeneracy")
    invertible = all(b.is_invertible() for b in cylinder.blocks.values() if b.rows)
    return _create_result(False, error="cylinder correlator is not the identity of F", name="non-degeneracy",
                          invertible=invertible, first_difference=cylinder.first_difference(identity))


def check_consistency(S: CorrelatorSystem, bf: Optional[BlockFunctor] = None,
                      markings: Optional[Sequence[FineMarking]] = None,
                      max_genus: int = DEFAULT_MAX_GENUS, max_holes: int = DEFAULT_MAX_HOLES,
                      all_orientations: bool = False, include_w13: bool = False,
                      threads: Optional[int] = None) -> Dict[str, Any]:
    """
    Full verification of a correlator system; failures are itemized, never raised.

    The algebra axioms come first: an algebra that fails them (a twisted F,
    say) is reported at that stage and the block-level checks are skipped.
    """
    axioms = check_axioms(S.A)
    if not axioms["success"]:
        logger.info(f"[{S.A.name}] axioms fail; block-level checks skipped")
        return _create_result(False, error=axioms["error"], axioms=axioms, surfaces=[], global_checks=[])
    bf = bf or BlockFunctor(S.coend, S.F)
    markings = list(markings) if markings is not None else list(
        scope_markings(max_genus, max_holes, all_orientations))

    surface_checks = [(f"surface {i}", lambda M=M: check_surface(S, bf, M)) for i, M in enumerate(markings)]
    global_checks = [
        ("relation invariance", lambda: relation_invariance(S, bf, max_genus, max_holes, include_w13)),
        ("non-degeneracy", lambda: nondegeneracy(S)),
    ]
    if max_genus >= 1:
        global_checks.append(("S invariance", lambda: s_invariance(S, bf)))
    results = run_checks(surface_checks + global_checks, threads)
    surfaces, globals_ = results[:len(surface_checks)], results[len(surface_checks):]
    failed = [r for r in results if not r["success"]]
    summary = f"{len(results) - len(failed)}/{len(results)} correlator checks hold"
    if failed:
        return _create_result(False, error=f"{summary}; first failure: {failed[0]['name']}: {failed[0].get('error')}",
                              axioms=axioms, surfaces=surfaces, global_checks=globals_)
    return _create_result(True, message=summary, axioms=axioms, surfaces=surfaces, global_checks=globals_)


# ============================================================================
# Round Trip
# ============================================================================

def verify_bijection_roundtrip(S: CorrelatorSystem) -> Dict[str, Any]:
    """
    Reads (omega, eps, Phi) off the spheres with three outgoing, one incoming
    and two incoming circles and rebuilds the algebra from them.
    """
    C, A, F = S.category, S.A, S.F
    omega = S.correlator(0, 0, 3)
    eps = S.correlator(0, 1, 0)
    Phi = phi_from_form(C, F, S.correlator(0, 2, 0))
    rebuilt = from_generators(C, F, omega, eps, Phi, name=f"{A.name} (rebuilt)")
    pairs = {
        "omega": (omega, A.omega),
        "eps": (eps, A.eps),
        "Phi": (Phi, A.Phi),
        "m": (rebuilt.m, A.m),
        "eta": (rebuilt.eta, A.eta),
        "Delta": (rebuilt.Delta, A.Delta),
    }
    mismatched = [key for key, (mine, theirs) in pairs.items() if not mine.equals_matrixwise(theirs)]
    if mismatched:
        return _create_result(False, error=f"round trip changes {', '.join(mismatched)}", mismatched=mismatched)
    return _create_result(True, message=f"{A.name}: (omega, eps, Phi) regenerate the algebra exactly",
                          compared=list(pairs))
