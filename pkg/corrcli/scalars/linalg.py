#!/usr/bin/env python3
"""
Corr CLI - Exact Linear Algebra
Sparse matrices over Q(zeta_n): products, Kronecker products, RREF, nullspaces

Version: 1.0.0
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..core.errors import NotInvertible, ShapeMismatch
from .field import FieldElement, Scalar, as_field

Entries = Dict[Tuple[int, int], FieldElement]


class Matrix:
    """
    Immutable sparse matrix over a cyclotomic field.

    Only nonzero entries are stored. Rows and columns are 0-based.
    """

    __slots__ = ("rows", "cols", "order", "entries")

    def __init__(self, rows: int, cols: int, entries: Optional[Entries] = None, order: int = 1):
        self.rows = rows
        self.cols = cols
        self.order = order
        clean: Entries = {}
        if entries:
            for (i, j), value in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise ShapeMismatch(f"Entry ({i}, {j}) outside a {rows}x{cols} matrix")
                value = as_field(value, order)
                if not value.is_zero():
                    clean[(i, j)] = value
        self.entries = clean

    # --------------------------------------------------------------------- #
    # Constructors
    # --------------------------------------------------------------------- #

    @classmethod
    def _trusted(cls, rows: int, cols: int, entries: Entries, order: int) -> "Matrix":
        obj = cls.__new__(cls)
        obj.rows, obj.cols, obj.order = rows, cols, order
        obj.entries = entries
        return obj

    @classmethod
    def zeros(cls, rows: int, cols: int, order: int = 1) -> "Matrix":
        return cls._trusted(rows, cols, {}, order)

    @classmethod
    def identity(cls, n: int, order: int = 1) -> "Matrix":
        one = FieldElement.one(order)
        return cls._trusted(n, n, {(i, i): one for i in range(n)}, order)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], order: int = 1, cols: Optional[int] = None) -> "Matrix":
        n_cols = cols if cols is not None else (len(rows[0]) if rows else 0)
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise ShapeMismatch(f"Row {i} has {len(row)} entries, expected {n_cols}")
            for j, value in enumerate(row):
                entries[(i, j)] = value
        return cls(len(rows), n_cols, entries, order)

    @classmethod
    def diag(cls, values: Sequence[Scalar], order: int = 1) -> "Matrix":
        return cls(len(values), len(values), {(i, i): v for i, v in enumerate(values)}, order)

    @classmethod
    def column(cls, values: Sequence[Scalar], order: int = 1) -> "Matrix":
        return cls(len(values), 1, {(i, 0): v for i, v in enumerate(values)}, order)

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"], order: int = 1) -> "Matrix":
        entries: Entries = {}
        r = c = 0
        for block in blocks:
            for (i, j), v in block.entries.items():
                entries[(r + i, c + j)] = v
            r += block.rows
            c += block.cols
        return cls._trusted(r, c, entries, order)

    @classmethod
    def hstack(cls, blocks: Sequence["Matrix"], order: int = 1) -> "Matrix":
        if not blocks:
            return cls.zeros(0, 0, order)
        rows = blocks[0].rows
        entries: Entries = {}
        c = 0
        for block in blocks:
            if block.rows != rows:
                raise ShapeMismatch("hstack needs equal row counts")
            for (i, j), v in block.entries.items():
                entries[(i, c + j)] = v
            c += block.cols
        return cls._trusted(rows, c, entries, order)

    @classmethod
    def vstack(cls, blocks: Sequence["Matrix"], order: int = 1) -> "Matrix":
        if not blocks:
            return cls.zeros(0, 0, order)
        cols = blocks[0].cols
        entries: Entries = {}
        r = 0
        for block in blocks:
            if block.cols != cols:
                raise ShapeMismatch("vstack needs equal column counts")
            for (i, j), v in block.entries.items():
                entries[(r + i, j)] = v
            r += block.rows
        return cls._trusted(r, cols, entries, order)

    # --------------------------------------------------------------------- #
    # Access
    # --------------------------------------------------------------------- #

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: Tuple[int, int]) -> FieldElement:
        value = self.entries.get(key)
        return value if value is not None else FieldElement.zero(self.order)

    def to_rows(self) -> List[List[FieldElement]]:
        zero = FieldElement.zero(self.order)
        out = [[zero] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def col(self, j: int) -> "Matrix":
        return Matrix._trusted(
            self.rows, 1, {(i, 0): v for (i, jj), v in self.entries.items() if jj == j}, self.order
        )

    def col_values(self, j: int) -> List[FieldElement]:
        return [self[(i, j)] for i in range(self.rows)]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        rmap = {r: k for k, r in enumerate(row_idx)}
        cmap = {c: k for k, c in enumerate(col_idx)}
        entries = {
            (rmap[i], cmap[j]): v
            for (i, j), v in self.entries.items()
            if i in rmap and j in cmap
        }
        return Matrix._trusted(len(row_idx), len(col_idx), entries, self.order)

    def to_json(self) -> List[List[str]]:
        return [[v.to_string() for v in row] for row in self.to_rows()]

    # --------------------------------------------------------------------- #
    # Arithmetic
    # --------------------------------------------------------------------- #

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"Cannot multiply {self.shape} by {other.shape}")
        by_row: Dict[int, List[Tuple[int, FieldElement]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc: Entries = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                prod = a * b
                prev = acc.get(key)
                acc[key] = prod if prev is None else prev + prod
        order = max(self.order, other.order)
        return Matrix._trusted(
            self.rows, other.cols, {k: v for k, v in acc.items() if not v.is_zero()}, order
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeMismatch(f"Cannot add {self.shape} and {other.shape}")
        acc = dict(self.entries)
        for key, v in other.entries.items():
            prev = acc.get(key)
            acc[key] = v if prev is None else prev + v
        return Matrix._trusted(
            self.rows, self.cols, {k: v for k, v in acc.items() if not v.is_zero()},
            max(self.order, other.order),
        )

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(self.rows, self.cols, {k: -v for k, v in self.entries.items()}, self.order)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, s: Scalar) -> "Matrix":
        s = as_field(s, self.order) if not isinstance(s, FieldElement) else s
        if s.is_zero():
            return Matrix.zeros(self.rows, self.cols, self.order)
        return Matrix._trusted(
            self.rows, self.cols, {k: v * s for k, v in self.entries.items()}, max(self.order, s.order)
        )

    def transpose(self) -> "Matrix":
        return Matrix._trusted(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()}, self.order)

    def kron(self, other: "Matrix") -> "Matrix":
        entries: Entries = {}
        for (i, j), a in self.entries.items():
            for (k, l), b in other.entries.items():
                entries[(i * other.rows + k, j * other.cols + l)] = a * b
        return Matrix._trusted(
            self.rows * other.rows, self.cols * other.cols, entries, max(self.order, other.order)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def is_zero(self) -> bool:
        return not self.entries

    def is_identity(self) -> bool:
        if self.rows != self.cols or len(self.entries) != self.rows:
            return False
        return all(i == j and v.is_one() for (i, j), v in self.entries.items())

    def first_difference(self, other: "Matrix") -> Optional[Dict[str, object]]:
        """Location and values of the first differing entry (row-major), or None."""
        if self.shape != other.shape:
            return {"shape": [list(self.shape), list(other.shape)]}
        keys = sorted(set(self.entries) | set(other.entries))
        for key in keys:
            if self[key] != other[key]:
                return {"row": key[0], "col": key[1], "lhs": self[key].to_string(), "rhs": other[key].to_string()}
        return None

    # --------------------------------------------------------------------- #
    # Elimination
    # --------------------------------------------------------------------- #

    def rref(self) -> Tuple["Matrix", List[int]]:
        """Reduced row echelon form (Gauss-Jordan) and pivot columns."""
        rows: List[Dict[int, FieldElement]] = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        pivots: List[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((k for k in range(r, len(rows)) if c in rows[k]), None)
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = {j: v * inv for j, v in rows[r].items()}
            for k in range(len(rows)):
                if k != r and c in rows[k]:
                    factor = rows[k][c]
                    updated = dict(rows[k])
                    for j, v in rows[r].items():
                        new = updated.get(j, FieldElement.zero(self.order)) - factor * v
                        if new.is_zero():
                            updated.pop(j, None)
                        else:
                            updated[j] = new
                    rows[k] = updated
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in row.items()}
        return Matrix._trusted(self.rows, self.cols, entries, self.order), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> "Matrix":
        """Basis of the right nullspace as columns, one per free column in increasing order."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        one = FieldElement.one(self.order)
        entries: Entries = {}
        for k, f in enumerate(free):
            entries[(f, k)] = one
            for r, p in enumerate(pivots):
                v = reduced[(r, f)]
                if not v.is_zero():
                    entries[(p, k)] = -v
        return Matrix._trusted(self.cols, len(free), entries, self.order)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise NotInvertible(f"Non-square matrix {self.shape}")
        augmented = Matrix.hstack([self, Matrix.identity(self.rows, self.order)], self.order)
        reduced, pivots = augmented.rref()
        if pivots[: self.rows] != list(range(self.rows)):
            raise NotInvertible("Singular matrix", {"rank": len([p for p in pivots if p < self.cols])})
        return reduced.submatrix(range(self.rows), range(self.cols, 2 * self.cols))

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def solve(self, rhs: "Matrix") -> Optional["Matrix"]:
        """A particular solution X of self @ X = rhs, or None when inconsistent."""
        augmented = Matrix.hstack([self, rhs], self.order)
        reduced, pivots = augmented.rref()
        if any(p >= self.cols for p in pivots):
            return None
        entries: Entries = {}
        for r, p in enumerate(pivots):
            for j in range(rhs.cols):
                v = reduced[(r, self.cols + j)]
                if not v.is_zero():
                    entries[(p, j)] = v
        return Matrix._trusted(self.cols, rhs.cols, entries, self.order)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, nnz={len(self.entries)}, order={self.order})"


def stack_columns(columns: Iterable[Sequence[Scalar]], rows: int, order: int = 1) -> Matrix:
    """Builds a matrix whose j-th column is the j-th sequence."""
    entries = {}
    cols = 0
    for j, column in enumerate(columns):
        for i, v in enumerate(column):
            entries[(i, j)] = v
        cols = j + 1
    return Matrix(rows, cols, entries, order)
