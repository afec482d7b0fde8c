#!/usr/bin/env python3
"""
Corr CLI - Configuration Module
Central configuration, constants and environment variables

Version: 1.0.0
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

# Try to load python-dotenv (optional)
try:
    from dotenv import load_dotenv
    DOTENV_AVAILABLE = True
except ImportError:
    DOTENV_AVAILABLE = False


# ============================================================================
# General Constants
# ============================================================================

FORMAT_VERSION = 1

# Log file in home directory
LOG_FILE = Path.home() / ".corr-cli.log"

# Bundled category, algebra and marking files
DATA_DIR = Path(__file__).resolve().parent.parent.parent / "data"

# Verification scope
DEFAULT_MAX_GENUS = 1
DEFAULT_MAX_HOLES = 4

# Conventions recorded in every report
Z_DIRECTION = "clockwise"
LAMBDA_SIGN_CONVENTION = "positive-leading"

# Decimal digits used when locating square roots numerically
SQRT_SEARCH_PRECISION = 60


# ============================================================================
# Environment
# ============================================================================

def load_environment() -> None:
    """
    Loads environment variables from .env files.
    Searches in: current directory, home directory
    """
    if not DOTENV_AVAILABLE:
        return

    env_paths = [
        Path.cwd() / ".env",
        Path.home() / ".corr-cli.env",
        Path.home() / ".env",
    ]

    for env_path in env_paths:
        if env_path.exists():
            load_dotenv(env_path)
            break


def get_thread_count() -> int:
    """Returns the worker count from CORR_THREADS (at least 1)."""
    raw = os.getenv("CORR_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# Load environment on import
load_environment()


# ============================================================================
# Run Configuration
# ============================================================================

@dataclass
class RunConfig:
    """Options of one CLI invocation."""
    command: str
    paths: List[Path] = field(default_factory=list)
    max_genus: int = DEFAULT_MAX_GENUS
    max_holes: int = DEFAULT_MAX_HOLES
    dump_coend: bool = False
    include_w13: bool = False
    sign_convention: str = LAMBDA_SIGN_CONVENTION
    report: Optional[Path] = None

    def validate(self) -> None:
        """Raises ValueError for missing paths or negative limits."""
        for path in self.paths:
            if not Path(path).exists():
                raise ValueError(f"File not found: {path}")
        if self.max_genus < 0 or self.max_holes < 0:
            raise ValueError("Scope limits must be non-negative")
        if self.sign_convention not in ("positive-leading", "negative-leading"):
            raise ValueError(f"Unknown sign convention: {self.sign_convention}")
