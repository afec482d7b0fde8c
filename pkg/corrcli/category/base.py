#!/usr/bin/env python3
"""
Corr CLI - Ribbon Category Interface
Backend-agnostic operations on objects, hom-spaces and structural morphisms

Version: 1.0.0
"""

from abc import ABC, abstractmethod
from typing import Callable, Dict, List, Sequence

from ..core.errors import ShapeMismatch, UnknownAtom
from ..core.logging_config import logger
from ..scalars import FieldElement, Matrix
from .objects import Atom, ObjectExpr, Morphism, tensor_all


Family = Callable[[List[ObjectExpr]], Morphism]


class RibbonCategory(ABC):
    """
    A finite ribbon category presented by exact tensors.

    Backends implement the primitive structure (bases, tensor product,
    braiding, twist, pivot, right duality, coend data); everything derived
    from it (left duality, dual morphisms, inverses, dispatch by kind) lives
    here.
    """

    backend: str = "abstract"

    def __init__(self, name: str, order: int):
        self.name = name
        self.order = order
        self.composites: Dict[str, object] = {}

    # ======================================================================
    # Objects
    # ======================================================================

    def unit(self) -> ObjectExpr:
        return ObjectExpr.unit()

    def obj(self, *labels: str) -> ObjectExpr:
        """Object expression from labels; each label must be known."""
        expr = ObjectExpr.of(*labels)
        self.validate_object(expr)
        return expr

    def validate_object(self, expr: ObjectExpr) -> None:
        for atom in expr:
            if not self.is_known_label(atom.label):
                raise UnknownAtom(f"Unknown object label '{atom.label}' in {self.name}",
                                  {"label": atom.label, "category": self.name})

    @abstractmethod
    def is_known_label(self, label: str) -> bool:
        ...

    @abstractmethod
    def register_object(self, name: str, data) -> ObjectExpr:
        """Declares a composite object (direct sum of words, or a module)."""

    @abstractmethod
    def sector_dims(self, expr: ObjectExpr) -> Dict[str, int]:
        """Dimension of each basis sector of expr."""

    # ======================================================================
    # Hom-spaces
    # ======================================================================

    @abstractmethod
    def hom_space(self, A: ObjectExpr, B: ObjectExpr) -> List[Morphism]:
        """Deterministic ordered basis of Hom(A, B)."""

    def hom_dim(self, A: ObjectExpr, B: ObjectExpr) -> int:
        return len(self.hom_space(A, B))

    # ======================================================================
    # Composition and Tensor Product
    # ======================================================================

    def identity(self, X: ObjectExpr) -> Morphism:
        dims = self.sector_dims(X)
        return Morphism(X, X, {c: Matrix.identity(n, self.order) for c, n in dims.items()})

    def zero(self, A: ObjectExpr, B: ObjectExpr) -> Morphism:
        da, db = self.sector_dims(A), self.sector_dims(B)
        return Morphism(A, B, {c: Matrix.zeros(db[c], da[c], self.order) for c in da})

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """g o f."""
        if f.cod != g.dom:
            raise ShapeMismatch(
                f"Cannot compose {g.describe()} after {f.describe()}",
                {"cod_f": str(f.cod), "dom_g": str(g.dom)},
            )
        return Morphism(f.dom, g.cod, {c: g.blocks[c] @ f.blocks[c] for c in f.blocks})

    def chain(self, *morphisms: Morphism) -> Morphism:
        """Composite of morphisms listed in application order."""
        result = morphisms[0]
        for m in morphisms[1:]:
            result = self.compose(m, result)
        return result

    @abstractmethod
    def tensor(self, f: Morphism, g: Morphism) -> Morphism:
        ...

    def tensor_all(self, morphisms: Sequence[Morphism]) -> Morphism:
        result = morphisms[0]
        for m in morphisms[1:]:
            result = self.tensor(result, m)
        return result

    def whisker(self, left: ObjectExpr, f: Morphism, right: ObjectExpr) -> Morphism:
        """id_left (x) f (x) id_right."""
        result = f
        if not left.is_unit():
            result = self.tensor(self.identity(left), result)
        if not right.is_unit():
            result = self.tensor(result, self.identity(right))
        return result

    def inverse(self, f: Morphism) -> Morphism:
        return Morphism(f.cod, f.dom, {c: m.inverse() for c, m in f.blocks.items()})

    def relabel(self, f: Morphism, dom: ObjectExpr, cod: ObjectExpr) -> Morphism:
        """Same matrices, new expressions; the sector dimensions must agree."""
        if self.sector_dims(dom) != self.sector_dims(f.dom) or self.sector_dims(cod) != self.sector_dims(f.cod):
            raise ShapeMismatch(f"Cannot relabel {f.describe()} as {dom} -> {cod}")
        return Morphism(dom, cod, dict(f.blocks))

    # ======================================================================
    # Structural Morphisms
    # ======================================================================

    @abstractmethod
    def braiding(self, X: ObjectExpr, Y: ObjectExpr) -> Morphism:
        """c_{X,Y}: X (x) Y -> Y (x) X."""

    def braiding_inv(self, X: ObjectExpr, Y: ObjectExpr) -> Morphism:
        """c_{X,Y}^{-1}: Y (x) X -> X (x) Y."""
        return self.inverse(self.braiding(X, Y))

    @abstractmethod
    def twist(self, X: ObjectExpr) -> Morphism:
        ...

    def twist_inv(self, X: ObjectExpr) -> Morphism:
        return self.inverse(self.twist(X))

    @abstractmethod
    def pivot(self, X: ObjectExpr) -> Morphism:
        """pi_X: X -> X^vv."""

    def pivot_inv(self, X: ObjectExpr) -> Morphism:
        return self.inverse(self.pivot(X))

    @abstractmethod
    def coev(self, X: ObjectExpr) -> Morphism:
        """b_X: 1 -> X (x) X^v."""

    @abstractmethod
    def ev(self, X: ObjectExpr) -> Morphism:
        """d_X: X^v (x) X -> 1."""

    def coev_tilde(self, X: ObjectExpr) -> Morphism:
        """1 -> X^v (x) X, built from b_{X^v} and the inverse pivot."""
        Xv = X.dual()
        return self.compose(self.tensor(self.identity(Xv), self.pivot_inv(X)), self.coev(Xv))

    def ev_tilde(self, X: ObjectExpr) -> Morphism:
        """X (x) X^v -> 1, built from d_{X^v} and the pivot."""
        Xv = X.dual()
        return self.compose(self.ev(Xv), self.tensor(self.pivot(X), self.identity(Xv)))

    def associator(self, X: ObjectExpr, Y: ObjectExpr, Z: ObjectExpr) -> Morphism:
        # Words are normalized to left-nested form, so the associator is an identity.
        return self.identity(X @ Y @ Z)

    def structural_morphism(self, kind: str, objects: Sequence[ObjectExpr]) -> Morphism:
        """Dispatches by kind; arity is checked against the kind."""
        arity = {
            "braiding": 2, "braiding_inv": 2, "twist": 1, "twist_inv": 1,
            "eval": 1, "coev": 1, "eval'": 1, "coev'": 1,
            "pivot": 1, "pivot_inv": 1, "associator": 3,
        }
        if kind not in arity:
            raise ValueError(f"Unknown structural morphism: {kind}")
        if len(objects) != arity[kind]:
            raise ShapeMismatch(f"{kind} takes {arity[kind]} objects, got {len(objects)}")
        for X in objects:
            self.validate_object(X)

        handlers = {
            "braiding": lambda: self.braiding(*objects),
            "braiding_inv": lambda: self.braiding_inv(*objects),
            "twist": lambda: self.twist(objects[0]),
            "twist_inv": lambda: self.twist_inv(objects[0]),
            "eval": lambda: self.ev(objects[0]),
            "coev": lambda: self.coev(objects[0]),
            "eval'": lambda: self.ev_tilde(objects[0]),
            "coev'": lambda: self.coev_tilde(objects[0]),
            "pivot": lambda: self.pivot(objects[0]),
            "pivot_inv": lambda: self.pivot_inv(objects[0]),
            "associator": lambda: self.associator(*objects),
        }
        return handlers[kind]()

    def dual_of_morphism(self, f: Morphism) -> Morphism:
        """f^v: cod^v -> dom^v through the right duality."""
        X, Y = f.dom, f.cod
        Xv, Yv = X.dual(), Y.dual()
        step1 = self.tensor(self.identity(Yv), self.coev(X))
        step2 = self.whisker(Yv, f, Xv)
        step3 = self.tensor(self.ev(Y), self.identity(Xv))
        return self.chain(step1, step2, step3)

    # ======================================================================
    # Invariants: Hom(1, W)
    # ======================================================================

    @abstractmethod
    def invariants_dim(self, W: ObjectExpr) -> int:
        ...

    @abstractmethod
    def to_vector(self, f: Morphism) -> List[FieldElement]:
        """Coordinates of f: 1 -> W in the canonical basis of Hom(1, W)."""

    @abstractmethod
    def from_vector(self, W: ObjectExpr, coords: Sequence) -> Morphism:
        ...

    @abstractmethod
    def on_invariants(self, f: Morphism) -> Matrix:
        """Matrix of post-composition Hom(1, dom) -> Hom(1, cod)."""

    # ======================================================================
    # Coend
    # ======================================================================

    @abstractmethod
    def coend_object(self) -> ObjectExpr:
        """Registers (once) and returns the coend K."""

    @abstractmethod
    def coend_inclusion(self, X: ObjectExpr) -> Morphism:
        """Dinatural component i_X: X (x) X^v -> K."""

    @abstractmethod
    def coend_generators(self) -> List[ObjectExpr]:
        """Objects whose components i_X jointly determine maps out of K."""

    @abstractmethod
    def coend_from_family(self, n: int, cod: ObjectExpr, family: Family) -> Morphism:
        """
        The unique g: K^{(x)n} -> cod with g o (i_X1 (x) ... (x) i_Xn) = family([X1..Xn]).

        family receives the generating objects and returns a morphism
        X1 (x) X1^v (x) ... (x) Xn (x) Xn^v -> cod.
        """

    # ======================================================================
    # Helpers
    # ======================================================================

    def pair_word(self, objects: Sequence[ObjectExpr]) -> ObjectExpr:
        """X1 (x) X1^v (x) ... (x) Xn (x) Xn^v."""
        return tensor_all(X @ X.dual() for X in objects)

    def scalar(self, value) -> FieldElement:
        from ..scalars import as_field
        return as_field(value, self.order)

    def describe(self) -> Dict[str, object]:
        return {"name": self.name, "backend": self.backend, "cyclotomic_order": self.order}

    def log_cache(self, what: str, key) -> None:
        logger.debug(f"[{self.name}] cache miss {what}: {key}")


def atom_expr(label: str, dual: int = 0) -> ObjectExpr:
    return ObjectExpr((Atom(label, dual),))
