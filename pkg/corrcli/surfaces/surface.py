#!/usr/bin/env python3
"""
Corr CLI - Extended Surfaces
Components with genus and ordered, oriented boundary circles

Version: 1.0.0
"""

from dataclasses import dataclass, replace
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.errors import DataFormatError, UnknownBoundary

OUT = 1
IN = -1


@dataclass(frozen=True)
class Boundary:
    id: str
    orientation: int = OUT

    def to_json(self) -> Dict[str, Any]:
        return {"id": self.id, "orientation": self.orientation}


@dataclass(frozen=True)
class Component:
    genus: int = 0
    boundary: Tuple[Boundary, ...] = ()

    def ids(self) -> List[str]:
        return [b.id for b in self.boundary]

    def is_closed(self) -> bool:
        return not self.boundary

    def without(self, *ids: str) -> Tuple[Boundary, ...]:
        return tuple(b for b in self.boundary if b.id not in ids)

    def to_json(self) -> Dict[str, Any]:
        return {"genus": self.genus, "boundary": [b.to_json() for b in self.boundary]}


@dataclass(frozen=True)
class ExtendedSurface:
    """Disjoint union of components; the boundary order is part of the data."""

    components: Tuple[Component, ...]

    def __post_init__(self):
        seen = set()
        for comp in self.components:
            if comp.genus < 0:
                raise DataFormatError("Component genus must be non-negative", {"genus": comp.genus})
            for b in comp.boundary:
                if b.orientation not in (IN, OUT):
                    raise DataFormatError(f"Boundary '{b.id}' has orientation {b.orientation}")
                if b.id in seen:
                    raise DataFormatError(f"Boundary id '{b.id}' is used twice")
                seen.add(b.id)

    # ======================================================================
    # Constructors
    # ======================================================================

    @classmethod
    def sphere(cls, eps: Sequence[int], ids: Optional[Sequence[str]] = None, genus: int = 0) -> "ExtendedSurface":
        """One component with boundary ids '1'..'n' (or the given ids) and orientations eps."""
        ids = list(ids) if ids is not None else [str(k + 1) for k in range(len(eps))]
        if len(ids) != len(eps):
            raise DataFormatError("Need one orientation per boundary id")
        return cls((Component(genus, tuple(Boundary(i, e) for i, e in zip(ids, eps))),))

    def disjoint_union(self, other: "ExtendedSurface") -> "ExtendedSurface":
        return ExtendedSurface(self.components + other.components)

    # ======================================================================
    # Queries
    # ======================================================================

    def boundary_ids(self) -> List[str]:
        return [b.id for comp in self.components for b in comp.boundary]

    def boundary(self, bid: str) -> Boundary:
        for comp in self.components:
            for b in comp.boundary:
                if b.id == bid:
                    return b
        raise UnknownBoundary(f"No boundary circle '{bid}'", {"boundary": bid})

    def orientation(self, bid: str) -> int:
        return self.boundary(bid).orientation

    def component_index(self, bid: str) -> int:
        for k, comp in enumerate(self.components):
            if any(b.id == bid for b in comp.boundary):
                return k
        raise UnknownBoundary(f"No boundary circle '{bid}'", {"boundary": bid})

    def genus(self) -> int:
        return sum(c.genus for c in self.components)

    def with_component(self, index: int, component: Component) -> "ExtendedSurface":
        comps = list(self.components)
        comps[index] = component
        return replace(self, components=tuple(comps))

    # ======================================================================
    # JSON
    # ======================================================================

    def to_json(self) -> Dict[str, Any]:
        return {"components": [c.to_json() for c in self.components]}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "ExtendedSurface":
        try:
            comps = tuple(
                Component(
                    int(c.get("genus", 0)),
                    tuple(Boundary(str(b["id"]), int(b.get("orientation", OUT))) for b in c.get("boundary", [])),
                )
                for c in data["components"]
            )
        except (KeyError, TypeError, ValueError) as e:
            raise DataFormatError(f"Malformed surface: {e}") from e
        return cls(comps)
