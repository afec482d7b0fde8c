#!/usr/bin/env python3
"""
Corr CLI - Skeletal Backend
Fusion categories given by F-, R-symbols, twists and pivot coefficients

Version: 1.0.0
"""

import itertools
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.errors import DataFormatError, ShapeMismatch, UnknownAtom
from ..core.logging_config import logger
from ..scalars import FieldElement, Matrix, as_field
from .base import RibbonCategory, Family, atom_expr
from .objects import Atom, ObjectExpr, Morphism

Tree = Tuple[str, ...]
Letters = Tuple[str, ...]
Key = Tuple[Tuple[int, ...], Tree]
Vector = Dict[Tuple[Letters, Tree], FieldElement]

COEND_LABEL = "K"


class SkeletalCategory(RibbonCategory):
    """
    Multiplicity-free fusion category presented by its symbols.

    Conventions:
      |a(bc);f> = sum_e F^{abc}_d[e,f] |(ab)c;e>
      c_{a,b} maps the vertex c -> a(x)b to R^{ab}_c times the vertex c -> b(x)a
      basis of Hom(c, x_0 (x) ... (x) x_{N-1}): left-nested trees
      (u_0 = x_0, u_1, ..., u_{N-1} = c) with u_k in u_{k-1} (x) x_k
    """

    backend = "skeletal"

    def __init__(
        self,
        name: str,
        order: int,
        simples: Sequence[str],
        duals: Dict[str, str],
        fusion: Dict[Tuple[str, str], Sequence[str]],
        F: Dict[Tuple[str, str, str, str], Dict[Tuple[str, str], FieldElement]],
        R: Dict[Tuple[str, str, str], FieldElement],
        twist: Dict[str, FieldElement],
        pivot: Optional[Dict[str, FieldElement]] = None,
        unit_label: str = "1",
    ):
        super().__init__(name, order)
        self.simples = list(simples)
        if unit_label not in self.simples:
            raise DataFormatError(f"Unit '{unit_label}' is not among the simples of {name}")
        self.unit_label = unit_label
        self._rank = {a: k for k, a in enumerate(self.simples)}
        self.duals = dict(duals)
        self._fusion = {
            (a, b): sorted(set(outs), key=self._rank.__getitem__) for (a, b), outs in fusion.items()
        }
        self._F = F
        self._R = R
        self._theta = {a: as_field(twist.get(a, 1), order) for a in self.simples}
        self._pivot = {a: as_field((pivot or {}).get(a, 1), order) for a in self.simples}
        self.composites: Dict[str, List[Letters]] = {}
        self.factors: Optional[Tuple["SkeletalCategory", "SkeletalCategory"]] = None

        self._basis_cache: Dict[ObjectExpr, Dict[str, Tuple[List[Key], Dict[Key, int]]]] = {}
        self._trees_cache: Dict[Letters, Dict[str, List[Tree]]] = {}
        self._f_cache: Dict[Tuple[str, str, str, str], Tuple[Matrix, List[str], List[str]]] = {}
        self._finv_cache: Dict[Tuple[str, str, str, str], Matrix] = {}
        self._q_cache: Dict[Tuple[str, Letters, str], tuple] = {}
        self._coev_cache: Dict[Letters, Dict[Tree, FieldElement]] = {}
        self._ev_cache: Dict[Letters, Dict[Tree, FieldElement]] = {}
        self._inclusion_cache: Dict[ObjectExpr, Morphism] = {}
        self._validate_symbols()

    # ======================================================================
    # Fusion Data
    # ======================================================================

    def _validate_symbols(self) -> None:
        for a in self.simples:
            if a not in self.duals or self.duals[a] not in self._rank:
                raise DataFormatError(f"Missing or unknown dual for simple '{a}'", {"simple": a})
            if self.duals[self.duals[a]] != a:
                raise DataFormatError(f"Dual map is not an involution at '{a}'", {"simple": a})
        for a in self.simples:
            for b in self.simples:
                for c in self._fusion.get((a, b), []):
                    if c not in self._rank:
                        raise UnknownAtom(f"Fusion {a}x{b} names unknown simple '{c}'")

    def is_known_label(self, label: str) -> bool:
        return label in self._rank or label in self.composites

    def dual_label(self, a: str) -> str:
        return self.duals[a]

    def fuse(self, a: str, b: str) -> List[str]:
        if a == self.unit_label:
            return [b]
        if b == self.unit_label:
            return [a]
        return self._fusion.get((a, b), [])

    def n_symbol(self, a: str, b: str, c: str) -> int:
        return 1 if c in self.fuse(a, b) else 0

    def f_matrix(self, a: str, b: str, c: str, d: str) -> Tuple[Matrix, List[str], List[str]]:
        """F^{abc}_d with rows e in (ab) channels and columns f in (bc) channels."""
        key = (a, b, c, d)
        cached = self._f_cache.get(key)
        if cached is not None:
            return cached
        rows = [e for e in self.fuse(a, b) if self.n_symbol(e, c, d)]
        cols = [f for f in self.fuse(b, c) if self.n_symbol(a, f, d)]
        if len(rows) != len(cols):
            raise DataFormatError(f"F^{{{a}{b}{c}}}_{d} is not square", {"symbol": list(key)})
        given = self._F.get(key)
        entries = {}
        if not given:
            if len(rows) > 1:
                raise DataFormatError(f"Missing F-symbol F^{{{a}{b}{c}}}_{d}", {"symbol": list(key)})
            if rows:
                entries[(0, 0)] = FieldElement.one(self.order)
        else:
            for (e, f), value in given.items():
                if e not in rows or f not in cols:
                    raise DataFormatError(
                        f"F-symbol entry {a},{b},{c};{d};{e},{f} is not an allowed channel pair",
                        {"symbol": [a, b, c, d, e, f]},
                    )
                entries[(rows.index(e), cols.index(f))] = value
        result = (Matrix(len(rows), len(cols), entries, self.order), rows, cols)
        self._f_cache[key] = result
        return result

    def f_symbol(self, a: str, b: str, c: str, d: str, e: str, f: str) -> FieldElement:
        m, rows, cols = self.f_matrix(a, b, c, d)
        if e not in rows or f not in cols:
            return FieldElement.zero(self.order)
        return m[(rows.index(e), cols.index(f))]

    def _f_inverse(self, a: str, b: str, c: str, d: str) -> Matrix:
        key = (a, b, c, d)
        inv = self._finv_cache.get(key)
        if inv is None:
            inv = self.f_matrix(a, b, c, d)[0].inverse()
            self._finv_cache[key] = inv
        return inv

    def f_inverse_symbol(self, a: str, b: str, c: str, d: str, f: str, e: str) -> FieldElement:
        """Entry [f, e] of the inverse of F^{abc}_d."""
        _, rows, cols = self.f_matrix(a, b, c, d)
        if e not in rows or f not in cols:
            return FieldElement.zero(self.order)
        return self._f_inverse(a, b, c, d)[(cols.index(f), rows.index(e))]

    def r_symbol(self, a: str, b: str, c: str) -> FieldElement:
        if not self.n_symbol(a, b, c):
            return FieldElement.zero(self.order)
        value = self._R.get((a, b, c))
        if value is not None:
            return value
        if self.unit_label in (a, b):
            return FieldElement.one(self.order)
        raise DataFormatError(f"Missing R-symbol R^{{{a}{b}}}_{c}", {"symbol": [a, b, c]})

    def topological_twist(self, a: str) -> FieldElement:
        return self._theta[a]

    def pivot_coefficient(self, a: str) -> FieldElement:
        return self._pivot[a]

    def ev_coefficient(self, x: str) -> FieldElement:
        """Value of d_x on the basis tree of Hom(1, x^v (x) x)."""
        return self.f_inverse_symbol(x, self.duals[x], x, x, self.unit_label, self.unit_label).inverse()

    def qdim(self, a: str) -> FieldElement:
        """d_a = d'_a o b_a = p_a * e_{a-bar}."""
        return self._pivot[a] * self.ev_coefficient(self.duals[a])

    # ======================================================================
    # Objects and Bases
    # ======================================================================

    def register_object(self, name: str, data) -> ObjectExpr:
        """data: list of summand words (lists of simple labels)."""
        if name in self._rank:
            raise DataFormatError(f"Composite name '{name}' clashes with a simple label")
        summands = [tuple(w) if not isinstance(w, str) else (w,) for w in data]
        if not summands:
            raise DataFormatError(f"Composite '{name}' has no summands")
        for w in summands:
            for x in w:
                if x not in self._rank:
                    raise UnknownAtom(f"Composite '{name}' uses unknown simple '{x}'", {"label": x})
        if len(set(summands)) != len(summands) or len({len(w) for w in summands}) != 1:
            raise DataFormatError(f"Summands of '{name}' must be distinct words of equal length")
        existing = self.composites.get(name)
        if existing is not None and existing != summands:
            raise DataFormatError(f"Composite '{name}' is already registered differently")
        self.composites[name] = summands
        logger.debug(f"[{self.name}] registered composite {name} = {summands}")
        return atom_expr(name)

    def atom_options(self, atom: Atom) -> List[Letters]:
        if atom.label in self._rank:
            x = atom.label
            return [(self.duals[x],)] if atom.dual % 2 else [(x,)]
        if atom.label not in self.composites:
            raise UnknownAtom(f"Unknown object label '{atom.label}' in {self.name}", {"label": atom.label})
        words = self.composites[atom.label]
        if atom.dual % 2:
            return [tuple(self.duals[x] for x in reversed(w)) for w in words]
        return list(words)

    def choices(self, X: ObjectExpr) -> List[Tuple[int, ...]]:
        return list(itertools.product(*[range(len(self.atom_options(a))) for a in X]))

    def letters(self, X: ObjectExpr, choice: Sequence[int]) -> Letters:
        out: Letters = ()
        for atom, k in zip(X, choice):
            out += self.atom_options(atom)[k]
        return out

    def trees(self, letters: Letters) -> Dict[str, List[Tree]]:
        cached = self._trees_cache.get(letters)
        if cached is not None:
            return cached
        if not letters:
            result = {self.unit_label: [()]}
        else:
            states: Dict[str, List[Tree]] = {letters[0]: [(letters[0],)]}
            for x in letters[1:]:
                nxt: Dict[str, List[Tree]] = {}
                for u, ts in states.items():
                    for w in self.fuse(u, x):
                        nxt.setdefault(w, []).extend(t + (w,) for t in ts)
                states = nxt
            result = {
                c: sorted(ts, key=lambda t: tuple(self._rank[s] for s in t)) for c, ts in states.items()
            }
        self._trees_cache[letters] = result
        return result

    def basis(self, X: ObjectExpr) -> Dict[str, Tuple[List[Key], Dict[Key, int]]]:
        cached = self._basis_cache.get(X)
        if cached is not None:
            return cached
        per_sector: Dict[str, List[Key]] = {c: [] for c in self.simples}
        for choice in self.choices(X):
            for c, ts in self.trees(self.letters(X, choice)).items():
                per_sector[c].extend((choice, t) for t in ts)
        result = {c: (keys, {k: i for i, k in enumerate(keys)}) for c, keys in per_sector.items()}
        self._basis_cache[X] = result
        self.log_cache("basis", str(X))
        return result

    def sector_dims(self, X: ObjectExpr) -> Dict[str, int]:
        return {c: len(keys) for c, (keys, _) in self.basis(X).items()}

    def hom_space(self, A: ObjectExpr, B: ObjectExpr) -> List[Morphism]:
        self.validate_object(A)
        self.validate_object(B)
        dims_a, dims_b = self.sector_dims(A), self.sector_dims(B)
        out = []
        for c in self.simples:
            for j in range(dims_a[c]):
                for i in range(dims_b[c]):
                    blocks = {s: Matrix.zeros(dims_b[s], dims_a[s], self.order) for s in self.simples}
                    blocks[c] = Matrix(dims_b[c], dims_a[c], {(i, j): 1}, self.order)
                    out.append(Morphism(A, B, blocks))
        return out

    # ======================================================================
    # Morphisms from Key Maps
    # ======================================================================

    def _from_key_map(self, dom: ObjectExpr, cod: ObjectExpr, fn) -> Morphism:
        """fn(sector, key) -> {cod key: coefficient}."""
        bdom, bcod = self.basis(dom), self.basis(cod)
        blocks = {}
        for c in self.simples:
            keys, _ = bdom[c]
            ckeys, cindex = bcod[c]
            entries = {}
            for j, key in enumerate(keys):
                for out_key, coef in fn(c, key).items():
                    if coef.is_zero():
                        continue
                    i = cindex[out_key]
                    prev = entries.get((i, j))
                    entries[(i, j)] = coef if prev is None else prev + coef
            blocks[c] = Matrix(len(ckeys), len(keys), entries, self.order)
        return Morphism(dom, cod, blocks)

    @staticmethod
    def _columns(m: Matrix) -> Dict[int, List[Tuple[int, FieldElement]]]:
        cols: Dict[int, List[Tuple[int, FieldElement]]] = {}
        for (i, j), v in m.entries.items():
            cols.setdefault(j, []).append((i, v))
        return cols

    # ======================================================================
    # Recoupling
    # ======================================================================

    def _expand(self, a: str, tB: Tree, letters: Letters, e: str) -> Dict[Tree, FieldElement]:
        """Vertex e -> a (x) (B-tree tB) rewritten as left-nested tails from a."""
        n = len(letters)
        if n == 0:
            return {(): FieldElement.one(self.order)} if e == a else {}
        if n == 1:
            return {(e,): FieldElement.one(self.order)}
        d, x, b = tB[-2], letters[-1], tB[-1]
        out: Dict[Tree, FieldElement] = {}
        for g in self.fuse(a, d):
            if not self.n_symbol(g, x, e):
                continue
            coef = self.f_symbol(a, d, x, e, g, b)
            if coef.is_zero():
                continue
            for tail, v in self._expand(a, tB[:-1], letters[:-1], g).items():
                key = tail + (e,)
                prev = out.get(key)
                out[key] = coef * v if prev is None else prev + coef * v
        return out

    def _q(self, a: str, letters: Letters, c: str):
        """Change of basis between split trees (tB, b) and left-nested tails from a."""
        key = (a, letters, c)
        cached = self._q_cache.get(key)
        if cached is not None:
            return cached
        if letters:
            split = [t for b in self.simples if self.n_symbol(a, b, c) for t in self.trees(letters).get(b, [])]
        else:
            split = [()] if a == c else []
        tails = [t[1:] for t in self.trees((a,) + letters).get(c, [])]
        tail_index = {t: i for i, t in enumerate(tails)}
        entries = {}
        for j, tB in enumerate(split):
            for tail, v in self._expand(a, tB, letters, c).items():
                entries[(tail_index[tail], j)] = v
        if len(tails) != len(split):
            raise ShapeMismatch(f"Recoupling space mismatch at {key}")
        q = Matrix(len(tails), len(split), entries, self.order)
        qinv_rows: Dict[int, List[Tuple[int, FieldElement]]] = {}
        for (j, i), v in q.inverse().entries.items():
            qinv_rows.setdefault(i, []).append((j, v))
        result = (tails, tail_index, split, {t: i for i, t in enumerate(split)},
                  self._columns(q), qinv_rows)
        self._q_cache[key] = result
        return result

    def _channel(self, tree: Tree) -> str:
        return tree[-1] if tree else self.unit_label

    def tensor(self, f: Morphism, g: Morphism) -> Morphism:
        A, A2, B, B2 = f.dom, f.cod, g.dom, g.cod
        nA = len(A)
        bA, bA2, bB, bB2 = self.basis(A), self.basis(A2), self.basis(B), self.basis(B2)
        f_cols = {c: self._columns(f.blocks[c]) for c in self.simples}
        g_cols = {c: self._columns(g.blocks[c]) for c in self.simples}

        def act(c: str, key: Key) -> Dict[Key, FieldElement]:
            choice, tree = key
            chA, chB = choice[:nA], choice[nA:]
            m = len(self.letters(A, chA))
            tA, tail = tree[:m], tree[m:]
            a = self._channel(tA)
            _, tail_index, split, _, _, qinv_by_tail = self._q(a, self.letters(B, chB), c)
            jA = bA[a][1][(chA, tA)]
            out: Dict[Key, FieldElement] = {}
            for j_split, coef in qinv_by_tail.get(tail_index[tail], ()):
                tB = split[j_split]
                b = self._channel(tB)
                jB = bB[b][1][(chB, tB)]
                for iA, va in f_cols[a].get(jA, ()):
                    chA2, tA2 = bA2[a][0][iA]
                    for iB, vb in g_cols[b].get(jB, ()):
                        chB2, tB2 = bB2[b][0][iB]
                        tails2, _, _, split2_index, q2_cols, _ = self._q(a, self.letters(B2, chB2), c)
                        base = coef * va * vb
                        for ti, vq in q2_cols.get(split2_index[tB2], ()):
                            out_key = (chA2 + chB2, tA2 + tails2[ti])
                            prev = out.get(out_key)
                            val = base * vq
                            out[out_key] = val if prev is None else prev + val
            return out

        return self._from_key_map(A @ B, A2 @ B2, act)

    # ======================================================================
    # Braiding
    # ======================================================================

    def _sigma(self, state: Vector, i: int, inverse: bool) -> Vector:
        """Swaps letters i, i+1 through c (or c^{-1}) on every tree of the state."""
        out: Vector = {}

        def add(key, value):
            prev = out.get(key)
            out[key] = value if prev is None else prev + value

        for (L, tree), coef in state.items():
            s, t = L[i], L[i + 1]
            L2 = L[:i] + (t, s) + L[i + 2:]
            if i == 0:
                u = tree[1]
                factor = self.r_symbol(t, s, u).inverse() if inverse else self.r_symbol(s, t, u)
                add((L2, (t,) + tree[1:]), coef * factor)
                continue
            p, w, v = tree[i - 1], tree[i], tree[i + 1]
            for f in self.fuse(s, t):
                if not self.n_symbol(p, f, v):
                    continue
                fin = self.f_inverse_symbol(p, s, t, v, f, w)
                if fin.is_zero():
                    continue
                factor = self.r_symbol(t, s, f).inverse() if inverse else self.r_symbol(s, t, f)
                for u2 in self.fuse(p, t):
                    if not self.n_symbol(u2, s, v):
                        continue
                    fwd = self.f_symbol(p, t, s, v, u2, f)
                    if fwd.is_zero():
                        continue
                    add((L2, tree[:i] + (u2,) + tree[i + 1:]), coef * fin * factor * fwd)
        return {k: v for k, v in out.items() if not v.is_zero()}

    def _braid_positions(self, m: int, n: int) -> List[int]:
        return [j for i in range(m - 1, -1, -1) for j in range(i, i + n)]

    def braiding(self, X: ObjectExpr, Y: ObjectExpr) -> Morphism:
        nX = len(X)
        one = FieldElement.one(self.order)

        def act(c: str, key: Key) -> Dict[Key, FieldElement]:
            choice, tree = key
            chX, chY = choice[:nX], choice[nX:]
            LX, LY = self.letters(X, chX), self.letters(Y, chY)
            state: Vector = {(LX + LY, tree): one}
            for j in self._braid_positions(len(LX), len(LY)):
                state = self._sigma(state, j, inverse=False)
            return {(chY + chX, t): v for (_, t), v in state.items()}

        return self._from_key_map(X @ Y, Y @ X, act)

    def braiding_inv(self, X: ObjectExpr, Y: ObjectExpr) -> Morphism:
        nY = len(Y)
        one = FieldElement.one(self.order)

        def act(c: str, key: Key) -> Dict[Key, FieldElement]:
            choice, tree = key
            chY, chX = choice[:nY], choice[nY:]
            LY, LX = self.letters(Y, chY), self.letters(X, chX)
            state: Vector = {(LY + LX, tree): one}
            for j in reversed(self._braid_positions(len(LX), len(LY))):
                state = self._sigma(state, j, inverse=True)
            return {(chX + chY, t): v for (_, t), v in state.items()}

        return self._from_key_map(Y @ X, X @ Y, act)

    # ======================================================================
    # Twist, Pivot, Dualities
    # ======================================================================

    def twist(self, X: ObjectExpr) -> Morphism:
        dims = self.sector_dims(X)
        return Morphism(X, X, {
            c: Matrix.identity(n, self.order).scale(self._theta[c]) for c, n in dims.items()
        })

    def _letters_pivot(self, letters: Letters) -> FieldElement:
        value = FieldElement.one(self.order)
        for x in letters:
            value = value * self._pivot[x]
        return value

    def pivot(self, X: ObjectExpr) -> Morphism:
        Xvv = X.dual().dual()
        return self._from_key_map(
            X, Xvv, lambda c, key: {key: self._letters_pivot(self.letters(X, key[0]))}
        )

    def _simple_word(self, letters: Letters) -> ObjectExpr:
        return ObjectExpr.of(*letters)

    def _bar(self, letters: Letters) -> Letters:
        return tuple(self.duals[x] for x in reversed(letters))

    def _unit_vector(self, W: ObjectExpr, values: Dict[Tree, FieldElement]) -> Morphism:
        """Morphism 1 -> W for a word of simple atoms, from tree coefficients."""
        zero_choice = (0,) * len(W)
        return self.from_vector_keys(W, {(zero_choice, t): v for t, v in values.items()})

    def from_vector_keys(self, W: ObjectExpr, values: Dict[Key, FieldElement]) -> Morphism:
        unit = self.unit()
        return self._from_key_map(
            unit, W, lambda c, key: values if c == self.unit_label else {}
        )

    def _coev_letters(self, letters: Letters) -> Dict[Tree, FieldElement]:
        """b for the word of simples, over letters + bar(letters), unit sector."""
        cached = self._coev_cache.get(letters)
        if cached is not None:
            return cached
        one = FieldElement.one(self.order)
        if not letters:
            result = {(): one}
        else:
            x, rest = letters[0], letters[1:]
            bx = self._unit_vector(self._simple_word((x, self.duals[x])), {(x, self.unit_label): one})
            if rest:
                inner = self._unit_vector(
                    self._simple_word(rest + self._bar(rest)), self._coev_letters(rest)
                )
                step = self.whisker(self._simple_word((x,)), inner, self._simple_word((self.duals[x],)))
                bx = self.compose(step, bx)
            result = {key[1]: v for key, v in self._vector_entries(bx).items()}
        self._coev_cache[letters] = result
        return result

    def _ev_letters(self, letters: Letters) -> Dict[Tree, FieldElement]:
        """d for the word of simples, over bar(letters) + letters, unit sector."""
        cached = self._ev_cache.get(letters)
        if cached is not None:
            return cached
        if not letters:
            result = {(): FieldElement.one(self.order)}
        else:
            x, rest = letters[0], letters[1:]
            dx = self._unit_covector(self._simple_word((self.duals[x], x)),
                                     {(self.duals[x], self.unit_label): self.ev_coefficient(x)})
            if rest:
                inner = self._unit_covector(self._simple_word(self._bar(rest) + rest), self._ev_letters(rest))
                step = self.whisker(self._simple_word(self._bar(rest)), dx, self._simple_word(rest))
                dx = self.compose(inner, step)
            result = {}
            keys, _ = self.basis(dx.dom)[self.unit_label]
            for (_, j), v in dx.blocks[self.unit_label].entries.items():
                result[keys[j][1]] = v
        self._ev_cache[letters] = result
        return result

    def _unit_covector(self, W: ObjectExpr, values: Dict[Tree, FieldElement]) -> Morphism:
        zero_choice = (0,) * len(W)
        lookup = {(zero_choice, t): v for t, v in values.items()}
        unit_key = ((), ())
        return self._from_key_map(
            W, self.unit(),
            lambda c, key: {unit_key: lookup[key]} if c == self.unit_label and key in lookup else {},
        )

    def _vector_entries(self, f: Morphism) -> Dict[Key, FieldElement]:
        keys, _ = self.basis(f.cod)[self.unit_label]
        return {keys[i]: v for (i, _), v in f.blocks[self.unit_label].entries.items()}

    def coev(self, X: ObjectExpr) -> Morphism:
        W = X @ X.dual()
        values: Dict[Key, FieldElement] = {}
        for choice in self.choices(X):
            full = choice + tuple(reversed(choice))
            for t, v in self._coev_letters(self.letters(X, choice)).items():
                values[(full, t)] = v
        return self.from_vector_keys(W, values)

    def ev(self, X: ObjectExpr) -> Morphism:
        W = X.dual() @ X
        lookup: Dict[Key, FieldElement] = {}
        for choice in self.choices(X):
            full = tuple(reversed(choice)) + choice
            for t, v in self._ev_letters(self.letters(X, choice)).items():
                lookup[(full, t)] = v
        unit_key = ((), ())
        return self._from_key_map(
            W, self.unit(),
            lambda c, key: {unit_key: lookup[key]} if c == self.unit_label and key in lookup else {},
        )

    # ======================================================================
    # Invariants
    # ======================================================================

    def invariants_dim(self, W: ObjectExpr) -> int:
        return self.sector_dims(W)[self.unit_label]

    def to_vector(self, f: Morphism) -> List[FieldElement]:
        block = f.blocks[self.unit_label]
        if block.cols != 1:
            raise ShapeMismatch(f"{f.describe()} is not a vector in Hom(1, W)")
        return block.col_values(0)

    def from_vector(self, W: ObjectExpr, coords: Sequence) -> Morphism:
        keys, _ = self.basis(W)[self.unit_label]
        if len(coords) != len(keys):
            raise ShapeMismatch(f"Expected {len(keys)} coordinates for Hom(1, {W}), got {len(coords)}")
        return self.from_vector_keys(W, {k: as_field(v, self.order) for k, v in zip(keys, coords)})

    def on_invariants(self, f: Morphism) -> Matrix:
        return f.blocks[self.unit_label]

    # ======================================================================
    # Coend
    # ======================================================================

    def coend_object(self) -> ObjectExpr:
        if COEND_LABEL not in self.composites:
            self.register_object(COEND_LABEL, [(a, self.duals[a]) for a in self.simples])
        return atom_expr(COEND_LABEL)

    def coend_generators(self) -> List[ObjectExpr]:
        return [ObjectExpr.of(a) for a in self.simples]

    def coend_summand_inclusion(self, a: str) -> Morphism:
        """i_a: a (x) a^v -> K, the inclusion of the summand labelled a."""
        K = self.coend_object()
        dom = ObjectExpr.of(a) @ ObjectExpr.of(a).dual()
        k = self._rank[a]
        return self._from_key_map(dom, K, lambda c, key: {((k,), key[1]): FieldElement.one(self.order)})

    def coend_inclusion(self, X: ObjectExpr) -> Morphism:
        """i_X = sum over sectors c and basis trees t of i_c o (p_t (x) t^v)."""
        cached = self._inclusion_cache.get(X)
        if cached is not None:
            return cached
        K = self.coend_object()
        dims = self.sector_dims(X)
        total = self.zero(X @ X.dual(), K)
        for c in self.simples:
            C = ObjectExpr.of(c)
            ic = self.coend_summand_inclusion(c)
            for idx in range(dims[c]):
                t = self._basis_morphism(C, X, c, idx, 0)
                p = self._basis_morphism(X, C, c, 0, idx)
                term = self.compose(ic, self.tensor(p, self.dual_of_morphism(t)))
                total = total + term
        self._inclusion_cache[X] = total
        return total

    def _basis_morphism(self, A: ObjectExpr, B: ObjectExpr, c: str, i: int, j: int) -> Morphism:
        da, db = self.sector_dims(A), self.sector_dims(B)
        blocks = {s: Matrix.zeros(db[s], da[s], self.order) for s in self.simples}
        blocks[c] = Matrix(db[c], da[c], {(i, j): 1}, self.order)
        return Morphism(A, B, blocks)

    def coend_from_family(self, n: int, cod: ObjectExpr, family: Family) -> Morphism:
        K = self.coend_object()
        dom = K.power(n)
        pieces: Dict[Tuple[int, ...], Morphism] = {}
        for labels in itertools.product(range(len(self.simples)), repeat=n):
            gens = [ObjectExpr.of(self.simples[k]) for k in labels]
            piece = family(gens)
            if piece.cod != cod:
                raise ShapeMismatch(f"Family member lands in {piece.cod}, expected {cod}")
            pieces[labels] = piece

        bdom = self.basis(dom)
        cod_dims = self.sector_dims(cod)
        zero_choice = (0,) * (2 * n)
        blocks = {}
        for c in self.simples:
            keys, _ = bdom[c]
            piece_cols = {labels: self._columns(p.blocks[c]) for labels, p in pieces.items()}
            entries = {}
            for j, (choice, tree) in enumerate(keys):
                _, pindex = self.basis(pieces[choice].dom)[c]
                for i, v in piece_cols[choice].get(pindex[(zero_choice, tree)], ()):
                    entries[(i, j)] = v
            blocks[c] = Matrix(cod_dims[c], len(keys), entries, self.order)
        return Morphism(dom, cod, blocks)
