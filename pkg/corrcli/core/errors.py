#!/usr/bin/env python3
"""
Corr CLI - Errors
Exception hierarchy shared by all engine modules

Version: 1.0.0
"""

from typing import Any, Dict, Optional


class CorrError(Exception):
    """Base class of every error raised by the engine."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"error": type(self).__name__, "message": self.message, **self.details}


# ============================================================================
# Scalars
# ============================================================================

class DivisionByZero(CorrError):
    """Inverse of the zero field element."""


class OrderMismatch(CorrError):
    """Operands live in different cyclotomic fields."""


class NotRepresentable(CorrError):
    """A square root does not exist in the declared field."""


# ============================================================================
# Categories and Morphisms
# ============================================================================

class DataFormatError(CorrError):
    """A data file is malformed."""


class UnknownAtom(CorrError):
    """An object label is not declared by the category."""


class ShapeMismatch(CorrError):
    """Domains/codomains or matrix shapes do not agree."""


class NotInvertible(CorrError):
    """A matrix or morphism expected to be invertible is singular."""


# ============================================================================
# Coend
# ============================================================================

class NoIntegral(CorrError):
    """The integral equations of the coend have no nonzero solution."""


class NormalizationNotRepresentable(CorrError):
    """The integral normalization needs a square root outside the field."""


class CategoryNotModular(CorrError):
    """S_K is degenerate."""


class StructureMismatch(CorrError):
    """A stored coend structure morphism disagrees with its defining formula."""


# ============================================================================
# Surfaces and Blocks
# ============================================================================

class InvalidLocation(CorrError):
    """A move was requested at a location where it is not defined."""


class PreconditionViolated(CorrError):
    """A move or sewing precondition fails."""


class OrientationMismatch(CorrError):
    """Sewing requires one incoming and one outgoing circle."""


class UnknownBoundary(CorrError):
    """A boundary id does not exist on the surface."""


class NotSameSurface(CorrError):
    """Two markings live on different extended surfaces."""


class InvalidSphereType(CorrError):
    """Elementary correlators exist only for spheres with p+q <= 3."""
