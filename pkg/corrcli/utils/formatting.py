#!/usr/bin/env python3
"""
Corr CLI - Formatting
Functions for formatted output

Version: 1.0.0
"""

import sys
from typing import Any, Dict, List
from ..core.logging_config import logger


# ============================================================================
# Formatted Output
# ============================================================================

def print_error(message: str) -> None:
    """Prints a formatted error message."""
    print(f"❌ Error: {message}", file=sys.stderr)
    logger.error(message)


def print_warning(message: str) -> None:
    """Prints a formatted warning."""
    print(f"⚠️  Warning: {message}", file=sys.stderr)
    logger.warning(message)


def print_success(message: str) -> None:
    """Prints a formatted success message."""
    print(f"✅ {message}")
    logger.info(message)


def print_info(message: str) -> None:
    """Prints a formatted info message."""
    print(f"ℹ️  {message}")
    logger.info(message)


def format_check_summary(items: List[Dict[str, Any]]) -> str:
    """
    Formats a list of check results for console output.

    Args:
        items: Result dictionaries with 'name' and 'success'

    Returns:
        One line per check
    """
    lines = []
    for item in items:
        icon = "✅" if item.get("success") else "❌"
        line = f"{icon} {item.get('name', '?')}"
        if not item.get("success") and item.get("error"):
            line += f": {item['error']}"
        lines.append(line)
    return "\n".join(lines)
