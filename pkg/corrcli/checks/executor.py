#!/usr/bin/env python3
"""
Corr CLI - Check Executor
Runs named checks on a bounded worker pool and keeps their order

Version: 1.0.0
"""

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..core.config import get_thread_count
from ..core.errors import CorrError
from ..core.logging_config import logger
from ..utils.helpers import _create_result

Check = Tuple[str, Callable[[], Dict[str, Any]]]


def _run_one(name: str, run: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
    start = time.perf_counter()
    try:
        result = run()
    except CorrError as e:
        logger.warning(f"check {name} raised {type(e).__name__}: {e.message}")
        result = _create_result(False, error=f"{type(e).__name__}: {e.message}", details=e.details)
    result.setdefault("name", name)
    result["seconds"] = round(time.perf_counter() - start, 3)
    logger.info(f"check {name}: {'ok' if result['success'] else 'FAILED'} ({result['seconds']}s)")
    return result


def run_checks(checks: Sequence[Check], threads: Optional[int] = None) -> List[Dict[str, Any]]:
    """
    Runs every check and returns the results in input order.

    CorrError raised by a check becomes a failed result; anything else
    propagates. The pool size defaults to CORR_THREADS.
    """
    threads = threads or get_thread_count()
    if threads == 1 or len(checks) < 2:
        return [_run_one(name, run) for name, run in checks]
    logger.debug(f"running {len(checks)} checks on {threads} threads")
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_run_one, name, run) for name, run in checks]
        return [f.result() for f in futures]


def first_failure(results: Sequence[Dict[str, Any]]) -> Optional[Dict[str, Any]]:
    for result in results:
        if not result.get("success"):
            return result
    return None
