#!/usr/bin/env python3
"""
Corr CLI - Hopf Backend
Module categories of finite-dimensional ribbon Hopf algebras

Version: 1.0.0
"""

from typing import Dict, List, Optional, Sequence, Tuple

from ..core.errors import DataFormatError, NotInvertible, ShapeMismatch, UnknownAtom
from ..core.logging_config import logger
from ..scalars import FieldElement, Matrix, as_field
from .base import RibbonCategory, Family, atom_expr
from .objects import Atom, ObjectExpr, Morphism

SECTOR = "*"
COEND_LABEL = "K"
REGULAR_LABEL = "H"

Sparse3 = Dict[Tuple[int, int], Dict[int, FieldElement]]


class HopfCategory(RibbonCategory):
    """
    Finite-dimensional modules over a ribbon Hopf algebra H.

    Elements of H are coefficient vectors in the basis e_0..e_{d-1}. Duals act
    through the antipode transpose, the braiding is flip o R, the twist is the
    action of the inverse ribbon element and the pivot is the action of
    g = u v^{-1} with u the Drinfeld element.
    """

    backend = "hopf"

    def __init__(
        self,
        name: str,
        order: int,
        dim: int,
        mult: Sparse3,
        unit: Sequence[FieldElement],
        comult: Dict[int, List[Tuple[int, int, FieldElement]]],
        counit: Sequence[FieldElement],
        antipode: Matrix,
        R: List[Tuple[int, int, FieldElement]],
        ribbon: Sequence[FieldElement],
        modules: Dict[str, List[Matrix]],
    ):
        super().__init__(name, order)
        self.dim = dim
        self.mult = mult
        self.unit_vec = [as_field(x, order) for x in unit]
        self.comult = comult
        self.counit = [as_field(x, order) for x in counit]
        self.antipode = antipode
        self.R = R
        self.ribbon = [as_field(x, order) for x in ribbon]
        self.composites: Dict[str, List[Matrix]] = {}
        self._rho_cache: Dict[ObjectExpr, List[Matrix]] = {}
        self._inv_cache: Dict[ObjectExpr, Tuple[Matrix, List[int]]] = {}
        self._hom_cache: Dict[Tuple[ObjectExpr, ObjectExpr], List[Morphism]] = {}

        for label, action in modules.items():
            self.register_object(label, action)
        self._left = [self._left_matrix(i) for i in range(dim)]
        self.register_object(REGULAR_LABEL, self._left)
        self.ribbon_inv = self.invert_element(self.ribbon)
        self.drinfeld_u = self._drinfeld_element()
        self.pivotal_g = self.multiply(self.drinfeld_u, self.ribbon_inv)

    # ======================================================================
    # Algebra
    # ======================================================================

    def _left_matrix(self, i: int) -> Matrix:
        entries = {}
        for j in range(self.dim):
            for k, c in self.mult.get((i, j), {}).items():
                entries[(k, j)] = c
        return Matrix(self.dim, self.dim, entries, self.order)

    def multiply(self, x: Sequence[FieldElement], y: Sequence[FieldElement]) -> List[FieldElement]:
        out = [FieldElement.zero(self.order)] * self.dim
        for i, a in enumerate(x):
            if a.is_zero():
                continue
            for j, b in enumerate(y):
                if b.is_zero():
                    continue
                for k, c in self.mult.get((i, j), {}).items():
                    out[k] = out[k] + a * b * c
        return out

    def basis_element(self, i: int) -> List[FieldElement]:
        vec = [FieldElement.zero(self.order)] * self.dim
        vec[i] = FieldElement.one(self.order)
        return vec

    def apply_antipode(self, x: Sequence[FieldElement]) -> List[FieldElement]:
        return (self.antipode @ Matrix.column(list(x), self.order)).col_values(0)

    def invert_element(self, x: Sequence[FieldElement]) -> List[FieldElement]:
        left = self._combination(self._left, x)
        sol = left.solve(Matrix.column(self.unit_vec, self.order))
        if sol is None:
            raise NotInvertible("Ribbon element is not invertible")
        return sol.col_values(0)

    def _drinfeld_element(self) -> List[FieldElement]:
        """u = sum S(R2) R1."""
        total = [FieldElement.zero(self.order)] * self.dim
        for i, j, c in self.R:
            term = self.multiply(self.apply_antipode(self.basis_element(j)), self.basis_element(i))
            total = [t + c * v for t, v in zip(total, term)]
        return total

    def _combination(self, mats: List[Matrix], x: Sequence[FieldElement]) -> Matrix:
        n = mats[0].rows
        total = Matrix.zeros(n, mats[0].cols, self.order)
        for m, c in zip(mats, x):
            if not c.is_zero():
                total = total + m.scale(c)
        return total

    # ======================================================================
    # Modules
    # ======================================================================

    def is_known_label(self, label: str) -> bool:
        return label in self.composites or label == COEND_LABEL

    def register_object(self, name: str, data) -> ObjectExpr:
        """data: list of dim action matrices, one per basis element of H."""
        action = [m if isinstance(m, Matrix) else Matrix.from_rows(m, self.order) for m in data]
        if len(action) != self.dim:
            raise DataFormatError(f"Module '{name}' needs {self.dim} action matrices, got {len(action)}")
        n = action[0].rows
        if any(m.shape != (n, n) for m in action):
            raise DataFormatError(f"Module '{name}' has action matrices of inconsistent shape")
        self.composites[name] = action
        self._rho_cache = {k: v for k, v in self._rho_cache.items() if all(a.label != name for a in k)}
        return atom_expr(name)

    def act(self, X: ObjectExpr, x: Sequence[FieldElement]) -> Matrix:
        """rho_X(x) for an algebra element x."""
        return self._combination(self.rho(X), x)

    def rho(self, X: ObjectExpr) -> List[Matrix]:
        cached = self._rho_cache.get(X)
        if cached is not None:
            return cached
        if X.is_unit():
            result = [Matrix.identity(1, self.order).scale(e) for e in self.counit]
        elif len(X) == 1:
            result = self._rho_atom(X.atoms[0])
        else:
            head, tail = X[:-1], X[-1:]
            rh, rt = self.rho(head), self.rho(tail)
            result = []
            for i in range(self.dim):
                total = Matrix.zeros(rh[0].rows * rt[0].rows, rh[0].cols * rt[0].cols, self.order)
                for j, k, c in self.comult.get(i, ()):
                    total = total + rh[j].kron(rt[k]).scale(c)
                result.append(total)
        self._rho_cache[X] = result
        return result

    def _rho_atom(self, atom: Atom) -> List[Matrix]:
        if atom.label == COEND_LABEL and COEND_LABEL not in self.composites:
            self.coend_object()
        if atom.label not in self.composites:
            raise UnknownAtom(f"Unknown module '{atom.label}' in {self.name}", {"label": atom.label})
        mats = self.composites[atom.label]
        for _ in range(atom.dual):
            # rho_{X^v}(e_i) = rho_X(S e_i)^T
            mats = [
                self._combination(mats, self.apply_antipode(self.basis_element(i))).transpose()
                for i in range(self.dim)
            ]
        return mats

    def module_dim(self, X: ObjectExpr) -> int:
        return self.rho(X)[0].rows

    def sector_dims(self, X: ObjectExpr) -> Dict[str, int]:
        return {SECTOR: self.module_dim(X)}

    def is_module(self, label: str) -> Optional[str]:
        """None if the action matrices form a representation, else a description of the failure."""
        X = atom_expr(label)
        rho = self.rho(X)
        n = rho[0].rows
        if not self._combination(rho, self.unit_vec).is_identity():
            return "unit does not act as the identity"
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = rho[i] @ rho[j]
                rhs = Matrix.zeros(n, n, self.order)
                for k, c in self.mult.get((i, j), {}).items():
                    rhs = rhs + rho[k].scale(c)
                if lhs != rhs:
                    return f"rho(e_{i}) rho(e_{j}) != rho(e_{i} e_{j})"
        return None

    # ======================================================================
    # Hom-spaces
    # ======================================================================

    def _intertwiner_system(self, A: ObjectExpr, B: ObjectExpr) -> Matrix:
        ra, rb = self.rho(A), self.rho(B)
        na, nb = ra[0].rows, rb[0].rows
        ia, ib = Matrix.identity(na, self.order), Matrix.identity(nb, self.order)
        # row-major vec: vec(B X) = (B (x) I) vec X, vec(X A) = (I (x) A^T) vec X
        return Matrix.vstack([rb[i].kron(ia) - ib.kron(ra[i].transpose()) for i in range(self.dim)], self.order)

    def hom_space(self, A: ObjectExpr, B: ObjectExpr) -> List[Morphism]:
        self.validate_object(A)
        self.validate_object(B)
        key = (A, B)
        cached = self._hom_cache.get(key)
        if cached is not None:
            return cached
        na, nb = self.module_dim(A), self.module_dim(B)
        null = self._intertwiner_system(A, B).nullspace()
        out = []
        for k in range(null.cols):
            entries = {(r // na, r % na): v for (r, kk), v in null.entries.items() if kk == k}
            out.append(Morphism(A, B, {SECTOR: Matrix(nb, na, entries, self.order)}))
        self._hom_cache[key] = out
        logger.debug(f"[{self.name}] Hom({A}, {B}) has dimension {len(out)}")
        return out

    # ======================================================================
    # Monoidal and Ribbon Structure
    # ======================================================================

    def tensor(self, f: Morphism, g: Morphism) -> Morphism:
        return Morphism(f.dom @ g.dom, f.cod @ g.cod, {SECTOR: f.blocks[SECTOR].kron(g.blocks[SECTOR])})

    def _swap(self, nx: int, ny: int) -> Matrix:
        entries = {(y * nx + x, x * ny + y): 1 for x in range(nx) for y in range(ny)}
        return Matrix(nx * ny, nx * ny, entries, self.order)

    def braiding(self, X: ObjectExpr, Y: ObjectExpr) -> Morphism:
        rx, ry = self.rho(X), self.rho(Y)
        nx, ny = rx[0].rows, ry[0].rows
        r_action = Matrix.zeros(nx * ny, nx * ny, self.order)
        for i, j, c in self.R:
            r_action = r_action + rx[i].kron(ry[j]).scale(c)
        return Morphism(X @ Y, Y @ X, {SECTOR: self._swap(nx, ny) @ r_action})

    def twist(self, X: ObjectExpr) -> Morphism:
        return Morphism(X, X, {SECTOR: self.act(X, self.ribbon_inv)})

    def pivot(self, X: ObjectExpr) -> Morphism:
        return Morphism(X, X.dual().dual(), {SECTOR: self.act(X, self.pivotal_g)})

    def coev(self, X: ObjectExpr) -> Morphism:
        n = self.module_dim(X)
        column = Matrix(n * n, 1, {(k * n + k, 0): 1 for k in range(n)}, self.order)
        return Morphism(self.unit(), X @ X.dual(), {SECTOR: column})

    def ev(self, X: ObjectExpr) -> Morphism:
        n = self.module_dim(X)
        row = Matrix(1, n * n, {(0, k * n + k): 1 for k in range(n)}, self.order)
        return Morphism(X.dual() @ X, self.unit(), {SECTOR: row})

    # ======================================================================
    # Invariants
    # ======================================================================

    def _invariants(self, W: ObjectExpr) -> Tuple[Matrix, List[int]]:
        cached = self._inv_cache.get(W)
        if cached is not None:
            return cached
        rho = self.rho(W)
        n = rho[0].rows
        eye = Matrix.identity(n, self.order)
        system = Matrix.vstack([rho[i] - eye.scale(self.counit[i]) for i in range(self.dim)], self.order)
        null = system.nullspace()
        _, pivots = system.rref()
        pivot_set = set(pivots)
        free = [c for c in range(n) if c not in pivot_set]
        self._inv_cache[W] = (null, free)
        return null, free

    def invariants_dim(self, W: ObjectExpr) -> int:
        return self._invariants(W)[0].cols

    def to_vector(self, f: Morphism) -> List[FieldElement]:
        block = f.blocks[SECTOR]
        if block.cols != 1:
            raise ShapeMismatch(f"{f.describe()} is not a vector in Hom(1, W)")
        _, free = self._invariants(f.cod)
        return [block[(r, 0)] for r in free]

    def from_vector(self, W: ObjectExpr, coords: Sequence) -> Morphism:
        null, _ = self._invariants(W)
        if len(coords) != null.cols:
            raise ShapeMismatch(f"Expected {null.cols} coordinates for Hom(1, {W}), got {len(coords)}")
        column = null @ Matrix.column([as_field(c, self.order) for c in coords], self.order)
        return Morphism(self.unit(), W, {SECTOR: column})

    def on_invariants(self, f: Morphism) -> Matrix:
        null, _ = self._invariants(f.dom)
        _, free = self._invariants(f.cod)
        image = f.blocks[SECTOR] @ null
        return image.submatrix(free, range(image.cols))

    # ======================================================================
    # Coend
    # ======================================================================

    def coend_object(self) -> ObjectExpr:
        """K = H* with the coadjoint action (h.phi)(a) = phi(S(h_2) a h_1)."""
        if COEND_LABEL not in self.composites:
            action = []
            for i in range(self.dim):
                entries = {}
                for a, b, c in self.comult.get(i, ()):
                    s_b = self.apply_antipode(self.basis_element(b))
                    for j in range(self.dim):
                        prod = self.multiply(self.multiply(s_b, self.basis_element(j)), self.basis_element(a))
                        for l, v in enumerate(prod):
                            if not v.is_zero():
                                prev = entries.get((j, l))
                                entries[(j, l)] = c * v if prev is None else prev + c * v
                action.append(Matrix(self.dim, self.dim, entries, self.order))
            self.register_object(COEND_LABEL, action)
        return atom_expr(COEND_LABEL)

    def coend_generators(self) -> List[ObjectExpr]:
        return [atom_expr(REGULAR_LABEL)]

    def coend_inclusion(self, X: ObjectExpr) -> Morphism:
        """i_X(x (x) xi) = xi((-) x)."""
        K = self.coend_object()
        rho = self.rho(X)
        n = rho[0].rows
        entries = {}
        for l in range(self.dim):
            for (k, j), v in rho[l].entries.items():
                entries[(l, j * n + k)] = v
        return Morphism(X @ X.dual(), K, {SECTOR: Matrix(self.dim, n * n, entries, self.order)})

    def coend_from_family(self, n: int, cod: ObjectExpr, family: Family) -> Morphism:
        K = self.coend_object()
        H = atom_expr(REGULAR_LABEL)
        G = family([H] * n)
        if G.cod != cod:
            raise ShapeMismatch(f"Family lands in {G.cod}, expected {cod}")
        incl = self.coend_inclusion(H).blocks[SECTOR]
        total = incl
        for _ in range(n - 1):
            total = total.kron(incl)
        solution = total.transpose().solve(G.blocks[SECTOR].transpose())
        if solution is None:
            raise ShapeMismatch("Family is not dinatural; it does not factor through the coend")
        return Morphism(K.power(n), cod, {SECTOR: solution.transpose()})
