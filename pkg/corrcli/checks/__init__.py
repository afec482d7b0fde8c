"""Named-check dispatch on a worker pool and report assembly."""

from .executor import first_failure, run_checks
from .report import assemble_report, conventions, versions

__all__ = ['first_failure', 'run_checks', 'assemble_report', 'conventions', 'versions']
