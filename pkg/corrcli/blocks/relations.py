#!/usr/bin/env python3
"""
Corr CLI - Relations on Blocks
Compares both sides of every bundled relation as exact matrices

Version: 1.0.0
"""

import time
from typing import Any, Dict, List, Optional, Sequence

from ..core.errors import CorrError
from ..core.logging_config import logger
from ..surfaces.relations import RelationInstance, check_relation_rewrite, relation_instances, relation_names
from ..utils.helpers import _create_result
from .matrices import word_matrix
from .space import BlockFunctor


def check_instance(bf: BlockFunctor, instance: RelationInstance) -> Dict[str, Any]:
    """Rewrite closure first, then lhs and rhs matrices compared entry by entry."""
    rewrite = check_relation_rewrite(instance)
    if not rewrite["success"]:
        return rewrite
    try:
        lhs, _ = word_matrix(bf, instance.marking, instance.lhs)
        rhs, _ = word_matrix(bf, instance.marking, instance.rhs)
    except CorrError as e:
        return _create_result(False, error=f"{instance.name}: {e.message}", **instance.to_json())
    if lhs == rhs:
        return _create_result(True, message=f"{instance.name}: matrices agree",
                              dim=lhs.cols, **instance.to_json())
    return _create_result(False, error=f"{instance.name}: matrices differ",
                          first_difference=lhs.first_difference(rhs), **instance.to_json())


def check_relations_on_blocks(bf: BlockFunctor, names: Optional[Sequence[str]] = None,
                              include_w13: bool = False) -> Dict[str, Any]:
    """
    Checks the named relations (all bundled ones by default).

    Raises:
        KeyError: a name is neither a relation nor an alias
    """
    names = list(names) if names else relation_names(include_w13)
    results: List[Dict[str, Any]] = []
    start = time.perf_counter()
    for name in names:
        for inst in relation_instances(name):
            result = check_instance(bf, inst)
            logger.info(f"relation {inst.name}: {'ok' if result['success'] else 'FAILED'}")
            results.append(result)
    failed = [r for r in results if not r["success"]]
    return _create_result(
        not failed,
        message=f"{len(results) - len(failed)}/{len(results)} relation instances hold",
        results=results,
        normalized=bf.coend.normalized,
        seconds=round(time.perf_counter() - start, 3),
    )
