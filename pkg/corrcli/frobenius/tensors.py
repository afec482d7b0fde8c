#!/usr/bin/env python3
"""
Corr CLI - Algebra Tensors
Morphisms between tensor powers of the bulk object from sparse entry lists

Version: 1.0.0
"""

from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..category.base import RibbonCategory
from ..category.hopf import SECTOR, HopfCategory
from ..category.objects import Morphism, ObjectExpr
from ..category.skeletal import SkeletalCategory
from ..core.errors import DataFormatError
from ..scalars import FieldElement, Matrix, as_field


def _sector(C: SkeletalCategory, dom_trees: Dict, cod_trees: Dict, requested: Optional[str]) -> str:
    if requested is not None:
        candidates = [requested]
    else:
        candidates = [c for c in C.simples
                      if len(dom_trees.get(c, [])) == 1 and len(cod_trees.get(c, [])) == 1]
    if len(candidates) != 1:
        raise DataFormatError("Tensor entry needs an explicit sector", {"candidates": candidates})
    c = candidates[0]
    if len(dom_trees.get(c, [])) != 1 or len(cod_trees.get(c, [])) != 1:
        raise DataFormatError(f"Sector '{c}' does not carry a unique fusion tree for this entry")
    return c


def summand_morphism(C: SkeletalCategory, dom: ObjectExpr, cod: ObjectExpr,
                     entries: Iterable[Sequence[Any]]) -> Morphism:
    """
    Builds dom -> cod from entries (dom choice, cod choice, value[, sector]).

    A choice picks one summand word per atom; the sector defaults to the
    only one in which both words have a single fusion tree.

    Raises:
        DataFormatError: an entry is malformed or ambiguous
    """
    table: Dict[str, Dict[Tuple, Dict[Tuple, FieldElement]]] = {}
    for entry in entries:
        if len(entry) not in (3, 4):
            raise DataFormatError(f"Malformed tensor entry {entry!r}")
        dom_choice, cod_choice = tuple(int(i) for i in entry[0]), tuple(int(i) for i in entry[1])
        if len(dom_choice) != len(dom) or len(cod_choice) != len(cod):
            raise DataFormatError(f"Entry {entry!r} does not match {dom} -> {cod}")
        try:
            dom_letters, cod_letters = C.letters(dom, dom_choice), C.letters(cod, cod_choice)
        except IndexError as e:
            raise DataFormatError(f"Entry {entry!r} picks a missing summand") from e
        dom_trees, cod_trees = C.trees(dom_letters), C.trees(cod_letters)
        c = _sector(C, dom_trees, cod_trees, entry[3] if len(entry) == 4 else None)
        value = as_field(entry[2], C.order)
        row = table.setdefault(c, {}).setdefault((dom_choice, dom_trees[c][0]), {})
        key = (cod_choice, cod_trees[c][0])
        row[key] = row[key] + value if key in row else value
    return C._from_key_map(dom, cod, lambda c, key: table.get(c, {}).get(key, {}))


def module_morphism(C: HopfCategory, dom: ObjectExpr, cod: ObjectExpr, rows: List[List[Any]]) -> Morphism:
    """dom -> cod from an explicit matrix; the intertwining property is left to check_axioms."""
    n_dom, n_cod = C.module_dim(dom), C.module_dim(cod)
    matrix = Matrix.from_rows([[as_field(v, C.order) for v in row] for row in rows], C.order, cols=n_dom)
    if matrix.shape != (n_cod, n_dom):
        raise DataFormatError(f"Matrix for {dom} -> {cod} must be {n_cod}x{n_dom}, got {matrix.shape}")
    return Morphism(dom, cod, {SECTOR: matrix})


def tensor_morphism(C: RibbonCategory, dom: ObjectExpr, cod: ObjectExpr, data: Any) -> Morphism:
    """Entry list (skeletal) or {"matrix": rows} (Hopf)."""
    if isinstance(C, SkeletalCategory):
        if not isinstance(data, list):
            raise DataFormatError("Skeletal tensors are lists of entries")
        return summand_morphism(C, dom, cod, data)
    if isinstance(C, HopfCategory):
        if not isinstance(data, dict) or "matrix" not in data:
            raise DataFormatError("Hopf tensors need a 'matrix' field")
        return module_morphism(C, dom, cod, data["matrix"])
    raise DataFormatError(f"Unsupported category backend {type(C).__name__}")
