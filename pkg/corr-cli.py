#!/usr/bin/env python3
"""
Corr CLI - exact verification of correlators built from Frobenius algebras

Launcher for running from a checkout; the installed console script
calls corrcli.cli:main directly.

Version: 1.0.0
"""

import sys

from corrcli.cli import main

if __name__ == '__main__':
    sys.exit(main())
