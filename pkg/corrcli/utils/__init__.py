"""Utilities: console output, JSON I/O, result dictionaries."""

from .formatting import (
    print_error,
    print_warning,
    print_success,
    print_info,
    format_check_summary,
)
from .helpers import _create_result, read_json, dump_json, write_json, get_version

__all__ = [
    'print_error', 'print_warning', 'print_success', 'print_info', 'format_check_summary',
    '_create_result', 'read_json', 'dump_json', 'write_json', 'get_version',
]
