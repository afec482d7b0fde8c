#!/usr/bin/env python3
"""
Corr CLI - Algebra Loader
Reads Frobenius algebra files given by (m, eta, eps), by (omega, eps, Phi) or canonically

Version: 1.0.0
"""

from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from ..category.base import RibbonCategory
from ..category.hopf import HopfCategory
from ..category.loader import load_category
from ..category.objects import ObjectExpr
from ..category.skeletal import SkeletalCategory
from ..core.config import FORMAT_VERSION
from ..core.errors import DataFormatError
from ..core.logging_config import logger
from ..utils.helpers import read_json
from .canonical import canonical_algebra
from .data import FrobeniusData, from_algebra, from_generators
from .tensors import tensor_morphism


def register_bulk_object(C: RibbonCategory, entry: Dict[str, Any]) -> ObjectExpr:
    """Registers F from {"name", "summands"} (skeletal) or {"name", "action"} (Hopf)."""
    name = entry.get("name", "F")
    if isinstance(C, SkeletalCategory):
        if "summands" not in entry:
            raise DataFormatError(f"Object '{name}' needs 'summands' in {C.name}")
        return C.register_object(name, entry["summands"])
    if isinstance(C, HopfCategory):
        if "action" not in entry:
            raise DataFormatError(f"Object '{name}' needs 'action' in {C.name}")
        return C.register_object(name, entry["action"])
    raise DataFormatError(f"Unsupported category backend {type(C).__name__}")


def _shapes(C: RibbonCategory, F: ObjectExpr) -> Dict[str, Tuple[ObjectExpr, ObjectExpr]]:
    unit = C.unit()
    return {
        "m": (F @ F, F),
        "eta": (unit, F),
        "eps": (F, unit),
        "Delta": (F, F @ F),
        "omega": (unit, F.power(3)),
        "Phi": (F, F.dual()),
    }


def _tensors(C: RibbonCategory, F: ObjectExpr, doc: Dict[str, Any], required, optional=()):
    tensors = doc.get("tensors", {})
    missing = [k for k in required if k not in tensors]
    if missing:
        raise DataFormatError(f"Missing tensors: {', '.join(missing)}", {"missing": missing})
    shapes = _shapes(C, F)
    out = {}
    for key in list(required) + [k for k in optional if k in tensors]:
        dom, cod = shapes[key]
        out[key] = tensor_morphism(C, dom, cod, tensors[key])
    return out


def parse_algebra(C: RibbonCategory, doc: Dict[str, Any], name: str) -> FrobeniusData:
    kind = doc.get("format", "algebra")
    if kind == "canonical":
        return canonical_algebra(C, name, doc.get("object", {}).get("name", "F"))
    if "object" not in doc:
        raise DataFormatError(f"Algebra '{name}' has no 'object'")
    F = register_bulk_object(C, doc["object"])

    builders = {
        "algebra": lambda: _from_algebra_doc(C, F, doc, name),
        "generators": lambda: _from_generators_doc(C, F, doc, name),
    }
    if kind not in builders:
        raise DataFormatError(f"Unknown algebra format '{kind}'")
    return builders[kind]()


def _from_algebra_doc(C: RibbonCategory, F: ObjectExpr, doc: Dict[str, Any], name: str) -> FrobeniusData:
    t = _tensors(C, F, doc, ("m", "eta", "eps"), ("Delta",))
    return from_algebra(C, F, t["m"], t["eta"], t["eps"], t.get("Delta"), name)


def _from_generators_doc(C: RibbonCategory, F: ObjectExpr, doc: Dict[str, Any], name: str) -> FrobeniusData:
    t = _tensors(C, F, doc, ("omega", "eps", "Phi"))
    return from_generators(C, F, t["omega"], t["eps"], t["Phi"], name)


def load_algebra(path: Union[str, Path], category: Optional[RibbonCategory] = None) -> FrobeniusData:
    """
    Loads an algebra file; without a category, the file's own 'category' path is used.

    Raises:
        DataFormatError: malformed file or unsupported format version
        NotInvertible: the Frobenius form is degenerate
    """
    path = Path(path)
    doc = read_json(path)
    version = doc.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise DataFormatError(f"Unsupported format_version {version} in {path}", {"path": str(path)})
    name = doc.get("name", path.stem)
    if category is None:
        if "category" not in doc:
            raise DataFormatError(f"{path} names no category; pass one explicitly", {"path": str(path)})
        category = load_category(path.parent / doc["category"])
    logger.info(f"Loading algebra {name} ({doc.get('format', 'algebra')}) over {category.name}")
    try:
        return parse_algebra(category, doc, name)
    except (KeyError, ValueError, TypeError) as e:
        raise DataFormatError(f"Malformed algebra file {path}: {e}", {"path": str(path)}) from e
