#!/usr/bin/env python3
"""
Corr CLI - Reports
Report assembly: versions, conventions, verdicts and optional timings

Version: 1.0.0
"""

from typing import Any, Dict, List, Sequence

import mpmath
import networkx
import sympy

from ..core.config import FORMAT_VERSION, LAMBDA_SIGN_CONVENTION, Z_DIRECTION
from ..utils.helpers import get_version

TIMING_KEY = "seconds"


def versions() -> Dict[str, str]:
    return {
        "corr-cli": get_version(),
        "sympy": sympy.__version__,
        "mpmath": mpmath.__version__,
        "networkx": networkx.__version__,
        "format_version": str(FORMAT_VERSION),
    }


def conventions(sign_convention: str = LAMBDA_SIGN_CONVENTION) -> Dict[str, str]:
    return {"lambda_sign": sign_convention, "z_direction": Z_DIRECTION}


def _collect_timings(data: Any, path: str, out: Dict[str, float]) -> Any:
    """Copies data without timing fields, recording them under their path."""
    if isinstance(data, dict):
        clean = {}
        for key, value in data.items():
            if key == TIMING_KEY and isinstance(value, (int, float)):
                out[path or "total"] = value
                continue
            clean[key] = _collect_timings(value, f"{path}/{key}" if path else str(key), out)
        return clean
    if isinstance(data, list):
        return [_collect_timings(item, f"{path}[{i}]", out) for i, item in enumerate(data)]
    return data


def assemble_report(command: str, results: Sequence[Dict[str, Any]], sign_convention: str = LAMBDA_SIGN_CONVENTION,
                    include_timings: bool = False) -> Dict[str, Any]:
    """
    One JSON-ready report for a CLI command.

    Timings vary between runs, so they are kept out of the report unless
    asked for; everything else is deterministic.
    """
    timings: Dict[str, float] = {}
    clean: List[Dict[str, Any]] = [_collect_timings(r, str(r.get("name", i)), timings) for i, r in enumerate(results)]
    failed = [r.get("name", str(i)) for i, r in enumerate(clean) if not r.get("success")]
    report = {
        "command": command,
        "success": not failed,
        "failed": failed,
        "versions": versions(),
        "conventions": conventions(sign_convention),
        "results": clean,
    }
    if include_timings:
        report["timings"] = timings
    return report
