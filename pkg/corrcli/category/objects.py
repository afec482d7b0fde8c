#!/usr/bin/env python3
"""
Corr CLI - Objects and Morphisms
Tensor words over atoms and sector-blocked exact morphisms

Version: 1.0.0
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Tuple

from ..core.errors import ShapeMismatch
from ..scalars import Matrix


# ============================================================================
# Object Expressions
# ============================================================================

@dataclass(frozen=True, order=True)
class Atom:
    """
    A named object, optionally dualized.

    label is a simple label (skeletal), a module id (hopf) or the name of a
    registered composite object such as the bulk object or the coend.
    """
    label: str
    dual: int = 0

    def dualized(self) -> "Atom":
        return Atom(self.label, self.dual + 1)

    def __str__(self) -> str:
        return self.label + "^v" * self.dual


@dataclass(frozen=True, order=True)
class ObjectExpr:
    """Left-nested tensor word; the empty word is the unit."""
    atoms: Tuple[Atom, ...] = ()

    @classmethod
    def of(cls, *labels: str) -> "ObjectExpr":
        return cls(tuple(Atom(label) for label in labels))

    @classmethod
    def unit(cls) -> "ObjectExpr":
        return cls(())

    def is_unit(self) -> bool:
        return not self.atoms

    def dual(self) -> "ObjectExpr":
        return ObjectExpr(tuple(a.dualized() for a in reversed(self.atoms)))

    def __matmul__(self, other: "ObjectExpr") -> "ObjectExpr":
        return ObjectExpr(self.atoms + other.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms)

    def __getitem__(self, index) -> "ObjectExpr":
        if isinstance(index, slice):
            return ObjectExpr(self.atoms[index])
        return ObjectExpr((self.atoms[index],))

    def power(self, n: int) -> "ObjectExpr":
        return ObjectExpr(self.atoms * n)

    def __str__(self) -> str:
        if not self.atoms:
            return "1"
        return "(x)".join(str(a) for a in self.atoms)


def tensor_all(exprs: Iterable[ObjectExpr]) -> ObjectExpr:
    atoms: Tuple[Atom, ...] = ()
    for e in exprs:
        atoms += e.atoms
    return ObjectExpr(atoms)


# ============================================================================
# Morphisms
# ============================================================================

class Morphism:
    """
    An exact morphism dom -> cod.

    The skeletal backend stores one block per simple sector c: the matrix of
    post-composition Hom(c, dom) -> Hom(c, cod) in fusion-tree bases. The hopf
    backend uses the single sector "*" holding the linear map itself.
    """

    __slots__ = ("dom", "cod", "blocks")

    def __init__(self, dom: ObjectExpr, cod: ObjectExpr, blocks: Dict[str, Matrix]):
        self.dom = dom
        self.cod = cod
        self.blocks = blocks

    def block(self, sector: str) -> Matrix:
        return self.blocks[sector]

    def sectors(self) -> Tuple[str, ...]:
        return tuple(self.blocks)

    def scale(self, s) -> "Morphism":
        return Morphism(self.dom, self.cod, {c: m.scale(s) for c, m in self.blocks.items()})

    def __add__(self, other: "Morphism") -> "Morphism":
        if (self.dom, self.cod) != (other.dom, other.cod):
            raise ShapeMismatch(f"Cannot add {self.describe()} and {other.describe()}")
        return Morphism(self.dom, self.cod, {c: m + other.blocks[c] for c, m in self.blocks.items()})

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + other.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.dom, self.cod) == (other.dom, other.cod) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, tuple(sorted(self.blocks.items(), key=lambda kv: kv[0]))))

    def equals_matrixwise(self, other: "Morphism") -> bool:
        """Equality of the underlying maps, ignoring the expression labels."""
        return self.blocks == other.blocks

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.blocks.values())

    def first_difference(self, other: "Morphism"):
        for c in self.blocks:
            diff = self.blocks[c].first_difference(other.blocks[c])
            if diff is not None:
                return {"sector": c, **diff}
        return None

    def describe(self) -> str:
        return f"{self.dom} -> {self.cod}"

    def to_json(self) -> Dict[str, object]:
        return {
            "dom": str(self.dom),
            "cod": str(self.cod),
            "blocks": {c: m.to_json() for c, m in sorted(self.blocks.items()) if m.rows and m.cols},
        }

    def __repr__(self) -> str:
        return f"Morphism({self.describe()}, sectors={len(self.blocks)})"
