#!/usr/bin/env python3
"""
Corr CLI - Helpers
General helper functions

Version: 1.0.0
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..core.errors import DataFormatError


# ============================================================================
# Results
# ============================================================================

def _create_result(
    success: bool,
    message: Optional[str] = None,
    error: Optional[str] = None,
    **kwargs
) -> Dict[str, Any]:
    """Creates a standardized result dictionary."""
    result: Dict[str, Any] = {"success": success}
    if message:
        result["message"] = message
    if error:
        result["error"] = error
    result.update(kwargs)
    return result


# ============================================================================
# JSON I/O
# ============================================================================

def read_json(path: Union[str, Path]) -> Dict[str, Any]:
    """Reads a UTF-8 JSON document, raising DataFormatError on failure."""
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError as e:
        raise DataFormatError(f"File not found: {path}") from e
    except json.JSONDecodeError as e:
        raise DataFormatError(f"Invalid JSON in {path}: {e}") from e


def dump_json(data: Any) -> str:
    """Deterministic JSON serialization (sorted keys, fixed separators)."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


def write_json(path: Union[str, Path], data: Any) -> None:
    Path(path).write_text(dump_json(data) + "\n", encoding="utf-8")


# ============================================================================
# Version
# ============================================================================

def get_version() -> str:
    """Returns the current version of corr-cli."""
    return "1.0.0"
