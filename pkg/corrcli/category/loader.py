#!/usr/bin/env python3
"""
Corr CLI - Category Loader
Reads category files (skeletal, hopf, or a named construction)

Version: 1.0.0
"""

from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

from ..core.config import FORMAT_VERSION
from ..core.errors import DataFormatError
from ..core.logging_config import logger
from ..scalars import FieldElement, Matrix
from ..utils.helpers import read_json
from .base import RibbonCategory
from .constructions import deligne_product, reverse, drinfeld_double_cyclic
from .hopf import HopfCategory
from .skeletal import SkeletalCategory


def _split(key: str, sep: str, parts: int) -> List[str]:
    items = [s.strip() for s in key.split(sep)]
    if len(items) != parts:
        raise DataFormatError(f"Malformed key '{key}'", {"key": key})
    return items


def _field(value: Any, order: int) -> FieldElement:
    return FieldElement.parse(value, order)


def _require(doc: Dict[str, Any], *names: str) -> None:
    missing = [n for n in names if n not in doc]
    if missing:
        raise DataFormatError(f"Missing fields: {', '.join(missing)}", {"missing": missing})


# ============================================================================
# Skeletal
# ============================================================================

def parse_skeletal(doc: Dict[str, Any], name: str) -> SkeletalCategory:
    _require(doc, "simples", "duals", "fusion")
    order = int(doc.get("cyclotomic_order", 1))
    fusion = {}
    for key, outs in doc["fusion"].items():
        a, b = _split(key, ",", 2)
        fusion[(a, b)] = list(outs)

    F: Dict[Tuple[str, str, str, str], Dict[Tuple[str, str], FieldElement]] = {}
    for key, value in doc.get("F", {}).items():
        abc, d, ef = _split(key, ";", 3)
        a, b, c = _split(abc, ",", 3)
        e, f = _split(ef, ",", 2)
        F.setdefault((a, b, c, d), {})[(e, f)] = _field(value, order)

    R = {}
    for key, value in doc.get("R", {}).items():
        ab, c = _split(key, ";", 2)
        a, b = _split(ab, ",", 2)
        R[(a, b, c)] = _field(value, order)

    twist = {a: _field(v, order) for a, v in doc.get("twist", {}).items()}
    pivot = {a: _field(v, order) for a, v in doc.get("pivot", {}).items()}
    return SkeletalCategory(
        name, order, doc["simples"], doc["duals"], fusion, F, R, twist, pivot,
        unit_label=doc.get("unit", "1"),
    )


# ============================================================================
# Hopf
# ============================================================================

def parse_hopf(doc: Dict[str, Any], name: str) -> HopfCategory:
    _require(doc, "dim", "mult", "unit", "comult", "counit", "antipode", "R", "ribbon", "modules")
    order = int(doc.get("cyclotomic_order", 1))
    dim = int(doc["dim"])

    mult: Dict[Tuple[int, int], Dict[int, FieldElement]] = {}
    for key, value in doc["mult"].items():
        ij, k = _split(key, ";", 2)
        i, j = (int(x) for x in _split(ij, ",", 2))
        mult.setdefault((i, j), {})[int(k)] = _field(value, order)

    comult: Dict[int, List[Tuple[int, int, FieldElement]]] = {}
    for key, value in doc["comult"].items():
        i, jk = _split(key, ";", 2)
        j, k = (int(x) for x in _split(jk, ",", 2))
        comult.setdefault(int(i), []).append((j, k, _field(value, order)))
    for terms in comult.values():
        terms.sort(key=lambda t: (t[0], t[1]))

    R = []
    for key, value in sorted(doc["R"].items()):
        i, j = (int(x) for x in _split(key, ",", 2))
        R.append((i, j, _field(value, order)))

    modules = {}
    for label, mats in doc["modules"].items():
        modules[label] = [Matrix.from_rows([[_field(v, order) for v in row] for row in m], order) for m in mats]

    antipode = Matrix.from_rows([[_field(v, order) for v in row] for row in doc["antipode"]], order)
    return HopfCategory(
        name, order, dim, mult,
        [_field(v, order) for v in doc["unit"]],
        comult,
        [_field(v, order) for v in doc["counit"]],
        antipode, R,
        [_field(v, order) for v in doc["ribbon"]],
        modules,
    )


# ============================================================================
# Entry Point
# ============================================================================

def load_category(path: Union[str, Path]) -> RibbonCategory:
    """
    Loads a category file.

    Raises:
        DataFormatError: malformed file or unsupported format version
    """
    path = Path(path)
    doc = read_json(path)
    version = doc.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise DataFormatError(f"Unsupported format_version {version} in {path}", {"path": str(path)})
    name = doc.get("name", path.stem)
    construction = doc.get("construction")
    backend = doc.get("backend")
    logger.info(f"Loading category {name} ({construction or backend}) from {path}")

    if construction == "deligne_product":
        first, second = (load_category(path.parent / p) for p in doc["factors"])
        return deligne_product(first, second, name)
    if construction == "reverse":
        return reverse(load_category(path.parent / doc["of"]), name)
    if construction == "drinfeld_double_cyclic":
        return drinfeld_double_cyclic(int(doc["n"]), name)
    if construction is not None:
        raise DataFormatError(f"Unknown construction '{construction}'", {"path": str(path)})

    parsers = {
        "skeletal": lambda: parse_skeletal(doc, name),
        "hopf": lambda: parse_hopf(doc, name),
    }
    if backend not in parsers:
        raise DataFormatError(f"Unknown backend '{backend}' in {path}", {"path": str(path)})
    try:
        return parsers[backend]()
    except (KeyError, ValueError, TypeError) as e:
        raise DataFormatError(f"Malformed category file {path}: {e}", {"path": str(path)}) from e
