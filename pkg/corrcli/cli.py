#!/usr/bin/env python3
"""
Corr CLI - Command Line
Subcommands for categories, coends, blocks, Frobenius algebras, correlators and markings

Exit codes: 0 when every requested check holds, 1 when a check fails,
2 when an input file cannot be read or parsed.

Version: 1.0.0
"""

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from .blocks import BlockFunctor, check_relations_on_blocks, move_matrix
from .category import load_category
from .category.axioms import check_category_axioms
from .category.base import RibbonCategory
from .checks import assemble_report, first_failure
from .coend import CoendK, build_coend_K, check_category_modularity, check_coend_identities
from .core.config import DEFAULT_MAX_GENUS, DEFAULT_MAX_HOLES, LAMBDA_SIGN_CONVENTION, RunConfig
from .core.errors import CorrError
from .core.logging_config import enable_debug_console, logger
from .correlators import (
    CorrelatorSystem,
    check_consistency,
    reference_marking,
    reference_vector,
    verify_bijection_roundtrip,
)
from .frobenius import FrobeniusData, check_axioms, check_modular, load_algebra, modular_invariant
from .surfaces import (
    ExtendedSurface,
    FineMarking,
    Move,
    apply_move,
    load_marking,
    sew_marking,
    sewing_preparation,
)
from .surfaces.surface import IN, OUT
from .utils.formatting import format_check_summary, print_error, print_success
from .utils.helpers import _create_result, dump_json, get_version, write_json

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

SIGN_CONVENTIONS = {"positive-leading": 1, "negative-leading": -1}

MOVE_PATTERN = re.compile(r"^(?P<kind>[ZBFASTC])(?P<inv>\^-1)?:(?P<where>[vck])(?P<id>-?\d+)(@(?P<split>\d+)(?P<side>[+-])?)?$")


# ============================================================================
# Loading
# ============================================================================

def _sign(args: argparse.Namespace) -> int:
    return SIGN_CONVENTIONS[getattr(args, "sign_convention", LAMBDA_SIGN_CONVENTION)]


def _coend(C: RibbonCategory, args: argparse.Namespace) -> CoendK:
    K = build_coend_K(C, _sign(args))
    if getattr(args, "unnormalized", False):
        K = K.rescaled(2)
    return K


def _algebra(args: argparse.Namespace) -> FrobeniusData:
    category = load_category(args.category) if getattr(args, "category", None) else None
    return load_algebra(args.algebra, category)


def _block_functor(args: argparse.Namespace) -> BlockFunctor:
    """F comes from --algebra, or from --summands over --category."""
    if getattr(args, "algebra", None):
        A = _algebra(args)
        return BlockFunctor(_coend(A.category, args), A.F)
    if not getattr(args, "category", None) or not getattr(args, "summands", None):
        raise CorrError("blocks commands need --algebra, or --category together with --summands")
    C = load_category(args.category)
    F = C.register_object("F", [s.strip() for s in args.summands.split(",")])
    return BlockFunctor(_coend(C, args), F)


def _surface_marking(args: argparse.Namespace) -> FineMarking:
    """--marking file, or the reference marking of a connected surface from --genus/--incoming/--outgoing."""
    if getattr(args, "marking", None):
        return load_marking(args.marking)
    eps = [IN] * args.incoming + [OUT] * args.outgoing
    return reference_marking(ExtendedSurface.sphere(eps, genus=args.genus))


def parse_move(text: str) -> Move:
    """
    Move from JSON or the compact form KIND[^-1]:v<id>|c<id>|k<id>[@split[+|-]].

    Examples: "Z:v0", "B^-1:v1", "S:c1", "F^-1:v0@2-", "C:k0".
    """
    text = text.strip()
    if text.startswith("{"):
        return Move.from_json(json.loads(text))
    match = MOVE_PATTERN.match(text)
    if not match:
        raise CorrError(f"Cannot parse move '{text}'")
    kind, inverse, where, ident = match["kind"], bool(match["inv"]), match["where"], int(match["id"])
    if match["split"] is not None:
        return Move.f_split(ident, int(match["split"]), -1 if match["side"] == "-" else 1)
    fields = {"v": "vertex", "c": "cut", "k": "component"}
    return Move(kind, **{fields[where]: ident}, inverse=inverse)


# ============================================================================
# Output
# ============================================================================

def _finish(command: str, results: List[Dict[str, Any]], args: argparse.Namespace,
            extra: Optional[Dict[str, Any]] = None) -> int:
    report = assemble_report(command, results, getattr(args, "sign_convention", LAMBDA_SIGN_CONVENTION),
                             include_timings=getattr(args, "timings", False))
    if extra:
        report.update(extra)
    if args.report:
        write_json(args.report, report)
        logger.info(f"report written to {args.report}")
        print(format_check_summary(report["results"]))
    else:
        print(dump_json(report))
    failure = first_failure(results)
    if failure is not None:
        print_error(f"{failure.get('name', command)}: {failure.get('error', 'check failed')}")
        return EXIT_FAILED
    if args.report:
        print_success(f"{command}: all checks hold")
    return EXIT_OK


# ============================================================================
# Commands
# ============================================================================

def cmd_check_category(args: argparse.Namespace) -> int:
    C = load_category(args.category)
    results = [dict(check_category_axioms(C), name="axioms")]
    K = _coend(C, args)
    results.append(dict(check_category_modularity(C, K), name="modularity"))
    results.append(dict(check_coend_identities(K), name="coend identities"))
    extra = {"coend": _coend_dump(K)} if args.dump_coend else None
    return _finish("check-category", results, args, extra)


def _coend_dump(K: CoendK) -> Dict[str, Any]:
    return {
        "category": K.category.name,
        "zeta": K.zeta.to_string(),
        "normalized": K.normalized,
        "integral_space_dim": K.integral_dim,
        "scale": K.scale.to_string(),
        "S": K.on_invariants("S").to_json(),
        "T": K.on_invariants("T").to_json(),
        "S_blocks": K.S.to_json(),
        "T_blocks": K.T.to_json(),
        "integral": K.integral.to_json(),
        "counit": K.counit.to_json(),
    }


def cmd_dump_coend(args: argparse.Namespace) -> int:
    K = _coend(load_category(args.category), args)
    return _finish("dump-coend", [_create_result(True, name="coend")], args, {"coend": _coend_dump(K)})


def cmd_blocks_dim(args: argparse.Namespace) -> int:
    bf = _block_functor(args)
    space = bf.space(_surface_marking(args))
    return _finish("blocks dim", [_create_result(True, name="dim", **space.to_json())], args)


def cmd_blocks_move_matrix(args: argparse.Namespace) -> int:
    bf = _block_functor(args)
    M = _surface_marking(args)
    mv = parse_move(args.move)
    matrix, N = move_matrix(bf, M, mv)
    result = _create_result(True, name="move matrix", move=mv.to_json(), source=bf.space(M).to_json(),
                            target=bf.space(N).to_json(), matrix=matrix.to_json())
    return _finish("blocks move-matrix", [result], args)


def cmd_blocks_check_relations(args: argparse.Namespace) -> int:
    bf = _block_functor(args)
    result = check_relations_on_blocks(bf, args.relation, include_w13=args.include_w13)
    return _finish("blocks check-relations", [dict(result, name="relations")], args)


def cmd_frobenius_check(args: argparse.Namespace) -> int:
    A = _algebra(args)
    results = [dict(check_axioms(A), name="axioms")]
    invariant = modular_invariant(A)
    extra = {"modular_invariant": invariant} if invariant["success"] else None
    return _finish("frobenius check", results, args, extra)


def cmd_frobenius_modular(args: argparse.Namespace) -> int:
    A = _algebra(args)
    K = _coend(A.category, args)
    return _finish("frobenius modular", [dict(check_modular(A, K), name="modular")], args)


def _system(args: argparse.Namespace) -> CorrelatorSystem:
    A = _algebra(args)
    return CorrelatorSystem(A, _coend(A.category, args))


def cmd_correlator_build(args: argparse.Namespace) -> int:
    S = _system(args)
    g, p, q = args.genus, args.incoming, args.outgoing
    v = S.correlator(g, p, q)
    ref = reference_marking(ExtendedSurface.sphere([IN] * p + [OUT] * q, genus=g))
    bf = BlockFunctor(S.coend, S.F)
    result = _create_result(True, name=f"v^{g}_{p}|{q}", morphism=v.to_json(),
                            space=bf.space(ref).to_json(), vector=reference_vector(S, bf, ref).to_json())
    return _finish("correlator build", [result], args)


def cmd_correlator_check(args: argparse.Namespace) -> int:
    S = _system(args)
    result = check_consistency(S, max_genus=args.max_genus, max_holes=args.max_holes,
                               all_orientations=args.all_orientations, include_w13=args.include_w13)
    return _finish("correlator check", [dict(result, name="consistency")], args)


def cmd_correlator_roundtrip(args: argparse.Namespace) -> int:
    S = _system(args)
    return _finish("correlator roundtrip", [dict(verify_bijection_roundtrip(S), name="roundtrip")], args)


def cmd_marking_show(args: argparse.Namespace) -> int:
    M = load_marking(args.marking)
    return _finish("marking show", [_create_result(True, name="marking", marking=M.to_json())], args)


def cmd_marking_apply(args: argparse.Namespace) -> int:
    M = load_marking(args.marking)
    path = [M]
    for text in args.move:
        path.append(apply_move(path[-1], parse_move(text)))
    if args.output:
        write_json(args.output, path[-1].to_json())
    return _finish("marking apply", [_create_result(True, name="marking", marking=path[-1].to_json(),
                                                    steps=len(path) - 1)], args)


def cmd_marking_sew(args: argparse.Namespace) -> int:
    M = load_marking(args.marking)
    N, cid = sew_marking(M, args.incoming_circle, args.outgoing_circle)
    if args.output:
        write_json(args.output, N.to_json())
    gathering = [str(mv) for mv in sewing_preparation(M, args.incoming_circle, args.outgoing_circle)]
    return _finish("marking sew", [_create_result(True, name="marking", marking=N.to_json(), cut=cid,
                                                  gathering=gathering)], args)


def cmd_group_help(parser: argparse.ArgumentParser) -> Callable[[argparse.Namespace], int]:
    def show(args: argparse.Namespace) -> int:
        parser.print_help()
        return EXIT_INPUT
    return show


# ============================================================================
# Parser
# ============================================================================

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--report', type=Path, help='Write the JSON report to this file instead of stdout')
    parser.add_argument('--timings', action='store_true', help='Include per-check timings in the report')
    parser.add_argument(
        '--sign-convention',
        choices=sorted(SIGN_CONVENTIONS),
        default=LAMBDA_SIGN_CONVENTION,
        help=f'Sign of the normalized integral (default: {LAMBDA_SIGN_CONVENTION})'
    )


def _add_algebra(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument('--category', type=Path, help='Category file (default: the one named by the algebra)')
    parser.add_argument('--algebra', type=Path, required=required, help='Algebra file')


def _add_surface(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--marking', type=Path, help='Marking file')
    parser.add_argument('--genus', type=int, default=0, help='Genus of the surface (default: 0)')
    parser.add_argument('--incoming', type=int, default=0, help='Number of incoming circles')
    parser.add_argument('--outgoing', type=int, default=0, help='Number of outgoing circles')


def create_parser() -> argparse.ArgumentParser:
    """
    Creates and configures the argument parser.

    Returns:
        Configured ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog='corr-cli',
        description='Corr CLI - exact verification of correlators from Frobenius algebras',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  corr-cli check-category data/toric.json
  corr-cli frobenius modular --algebra data/algebras/toric_1e.json
  corr-cli blocks check-relations --category data/toric.json --summands 1,e
  corr-cli correlator check --algebra data/algebras/vect_unit.json --max-genus 1
"""
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {get_version()}')
    parser.add_argument('--debug', action='store_true', help='Enable debug output on stderr')

    subparsers = parser.add_subparsers(title='Commands', dest='command',
                                       help='Use "corr-cli <command> --help" for details')

    # =========================================================================
    # Category Commands
    # =========================================================================
    p = subparsers.add_parser('check-category', help='Check the ribbon axioms, modularity and coend identities')
    p.add_argument('category', type=Path, help='Category file')
    p.add_argument('--dump-coend', action='store_true', help='Add the coend structure matrices to the report')
    _add_common(p)
    p.set_defaults(func=cmd_check_category)

    p = subparsers.add_parser('dump-coend', help='Write the coend structure morphisms')
    p.add_argument('category', type=Path, help='Category file')
    _add_common(p)
    p.set_defaults(func=cmd_dump_coend)

    # =========================================================================
    # Blocks Commands
    # =========================================================================
    p_blocks = subparsers.add_parser('blocks', help='Block spaces, move matrices and relations')
    p_blocks.set_defaults(func=cmd_group_help(p_blocks))
    blocks = p_blocks.add_subparsers(title='Blocks commands', dest='blocks_command')

    def block_options(p: argparse.ArgumentParser) -> None:
        _add_algebra(p, required=False)
        p.add_argument('--summands', help='Comma-separated summands of F when no algebra is given')
        p.add_argument('--unnormalized', action='store_true', help='Scale the integral by 2 (handle braiding then fails)')
        _add_common(p)

    p = blocks.add_parser('dim', help='Dimension of a block space')
    block_options(p)
    _add_surface(p)
    p.set_defaults(func=cmd_blocks_dim)

    p = blocks.add_parser('move-matrix', help='Matrix of one move')
    block_options(p)
    _add_surface(p)
    p.add_argument('--move', required=True, help='Move, e.g. "Z:v0", "B^-1:v1", "S:c1" or JSON')
    p.set_defaults(func=cmd_blocks_move_matrix)

    p = blocks.add_parser('check-relations', help='Check the bundled relation instances on blocks')
    block_options(p)
    p.add_argument('--relation', action='append', help='Relation name or W-alias (repeatable; default: all)')
    p.add_argument('--include-w13', action='store_true', help='Also check the two-holed torus relation (W13, slow)')
    p.set_defaults(func=cmd_blocks_check_relations)

    # =========================================================================
    # Frobenius Commands
    # =========================================================================
    p_frob = subparsers.add_parser('frobenius', help='Frobenius algebra axioms and modularity')
    p_frob.set_defaults(func=cmd_group_help(p_frob))
    frob = p_frob.add_subparsers(title='Frobenius commands', dest='frobenius_command')

    p = frob.add_parser('check', help='Check every algebra axiom')
    _add_algebra(p)
    _add_common(p)
    p.set_defaults(func=cmd_frobenius_check)

    p = frob.add_parser('modular', help='Check S_K-invariance of the algebra')
    _add_algebra(p)
    _add_common(p)
    p.set_defaults(func=cmd_frobenius_modular)

    # =========================================================================
    # Correlator Commands
    # =========================================================================
    p_corr = subparsers.add_parser('correlator', help='Correlators: build, check, round trip')
    p_corr.set_defaults(func=cmd_group_help(p_corr))
    corr = p_corr.add_subparsers(title='Correlator commands', dest='correlator_command')

    p = corr.add_parser('build', help='Build v^g_{p|q} and its block vector')
    _add_algebra(p)
    p.add_argument('--genus', type=int, default=0, help='Genus (default: 0)')
    p.add_argument('--incoming', type=int, default=0, help='Incoming circles p')
    p.add_argument('--outgoing', type=int, default=0, help='Outgoing circles q')
    _add_common(p)
    p.set_defaults(func=cmd_correlator_build)

    p = corr.add_parser('check', help='Full consistency verification')
    _add_algebra(p)
    p.add_argument('--max-genus', type=int, default=DEFAULT_MAX_GENUS,
                   help=f'Largest genus checked (default: {DEFAULT_MAX_GENUS})')
    p.add_argument('--max-holes', type=int, default=DEFAULT_MAX_HOLES,
                   help=f'Largest number of boundary circles (default: {DEFAULT_MAX_HOLES})')
    p.add_argument('--all-orientations', action='store_true', help='Check every orientation pattern')
    p.add_argument('--include-w13', action='store_true', help='Also check the two-holed torus relation (W13, slow)')
    _add_common(p)
    p.set_defaults(func=cmd_correlator_check)

    p = corr.add_parser('roundtrip', help='Recover (omega, eps, Phi) from the correlators')
    _add_algebra(p)
    _add_common(p)
    p.set_defaults(func=cmd_correlator_roundtrip)

    # =========================================================================
    # Marking Commands
    # =========================================================================
    p_mark = subparsers.add_parser('marking', help='Show, move and sew marking files')
    p_mark.set_defaults(func=cmd_group_help(p_mark))
    mark = p_mark.add_subparsers(title='Marking commands', dest='marking_command')

    p = mark.add_parser('show', help='Marking with its traversal words')
    p.add_argument('marking', type=Path, help='Marking file')
    _add_common(p)
    p.set_defaults(func=cmd_marking_show)

    p = mark.add_parser('apply', help='Apply moves in order')
    p.add_argument('marking', type=Path, help='Marking file')
    p.add_argument('--move', action='append', required=True, help='Move (repeatable)')
    p.add_argument('--output', type=Path, help='Write the resulting marking here')
    _add_common(p)
    p.set_defaults(func=cmd_marking_apply)

    p = mark.add_parser('sew', help='Sew an incoming circle to an outgoing one')
    p.add_argument('marking', type=Path, help='Marking file')
    p.add_argument('--incoming-circle', required=True, help='Id of the incoming circle')
    p.add_argument('--outgoing-circle', required=True, help='Id of the outgoing circle')
    p.add_argument('--output', type=Path, help='Write the sewn marking here')
    _add_common(p)
    p.set_defaults(func=cmd_marking_sew)

    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    paths = [getattr(args, key) for key in ("category", "algebra", "marking") if getattr(args, key, None)]
    return RunConfig(
        command=args.command,
        paths=paths,
        max_genus=getattr(args, "max_genus", DEFAULT_MAX_GENUS),
        max_holes=getattr(args, "max_holes", DEFAULT_MAX_HOLES),
        dump_coend=getattr(args, "dump_coend", False),
        include_w13=getattr(args, "include_w13", False),
        sign_convention=getattr(args, "sign_convention", LAMBDA_SIGN_CONVENTION),
        report=getattr(args, "report", None),
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point of the CLI application."""
    parser = create_parser()
    args = parser.parse_args(argv)

    if args.debug:
        enable_debug_console(logger)
        logger.debug("Debug mode enabled")

    if not hasattr(args, 'func'):
        parser.print_help()
        return EXIT_INPUT

    logger.info(f"Command started: {args.command}")
    try:
        _run_config(args).validate()
        return args.func(args)
    except (ValueError, OSError, KeyError) as e:
        print_error(str(e))
        return EXIT_INPUT
    except CorrError as e:
        print_error(f"{type(e).__name__}: {e.message}")
        logger.debug(f"details: {e.details}")
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
