#!/usr/bin/env python3
"""
Corr CLI - Correlator System
The closed-formula correlators v^g_{p|q}: F^p -> F^q (x) K^g of a Frobenius algebra

Version: 1.0.0
"""

import threading
from typing import Dict, List, Tuple

from ..category.base import RibbonCategory
from ..category.objects import Morphism, ObjectExpr
from ..coend.coend import CoendK
from ..core.errors import PreconditionViolated
from ..core.logging_config import logger
from ..frobenius.data import FrobeniusData


class CorrelatorSystem:
    """
    Correlators of one Frobenius algebra A over the coend K.

    v^g_{p|q} = (Delta^(q) (x) id_{K^g}) o tau^(g) o m^(p), where tau: F -> F (x) K
    adds a handle. Results are memoized by (g, p, q); worker threads share
    the cache, so writes go through a lock.
    """

    def __init__(self, A: FrobeniusData, coend: CoendK):
        if A.category is not coend.category:
            raise PreconditionViolated("The algebra and the coend live in different categories")
        self.A = A
        self.coend = coend
        self.category: RibbonCategory = A.category
        self.F: ObjectExpr = A.F
        self.K: ObjectExpr = coend.K
        self._cache: Dict[Tuple[int, int, int], Morphism] = {}
        self._powers: Dict[Tuple[str, int], Morphism] = {}
        self._lock = threading.Lock()
        self.tau = self._handle()

    # ======================================================================
    # Building Blocks
    # ======================================================================

    def _handle(self) -> Morphism:
        """tau = (m (x) i_F) o (id_F (x) [(Phi^-1 (x) pi_F^-1) o b_{F^v}] (x) Phi) o Delta."""
        C, A, F = self.category, self.A, self.F
        Fv = F.dual()
        loop = C.compose(C.tensor(A.Phi_inv, C.pivot_inv(F)), C.coev(Fv))
        middle = C.tensor_all([C.identity(F), loop, A.Phi])
        glue = C.tensor(A.m, C.coend_inclusion(F))
        return C.chain(A.Delta, middle, glue)

    def _remember(self, key: Tuple[str, int], value: Morphism) -> Morphism:
        with self._lock:
            return self._powers.setdefault(key, value)

    def multiplication(self, n: int) -> Morphism:
        """m^(n): F^n -> F, with m^(0) = eta and m^(1) = id."""
        cached = self._powers.get(("m", n))
        if cached is not None:
            return cached
        C = self.category
        if n == 0:
            return self._remember(("m", 0), self.A.eta)
        if n == 1:
            return self._remember(("m", 1), C.identity(self.F))
        value = C.compose(self.A.m, C.tensor(self.multiplication(n - 1), C.identity(self.F)))
        return self._remember(("m", n), value)

    def comultiplication(self, n: int) -> Morphism:
        """Delta^(n): F -> F^n, with Delta^(0) = eps and Delta^(1) = id."""
        cached = self._powers.get(("Delta", n))
        if cached is not None:
            return cached
        C = self.category
        if n == 0:
            return self._remember(("Delta", 0), self.A.eps)
        if n == 1:
            return self._remember(("Delta", 1), C.identity(self.F))
        value = C.compose(C.tensor(self.comultiplication(n - 1), C.identity(self.F)), self.A.Delta)
        return self._remember(("Delta", n), value)

    def handles(self, g: int) -> Morphism:
        """tau^(g): F -> F (x) K^g, with tau^(0) = id."""
        cached = self._powers.get(("tau", g))
        if cached is not None:
            return cached
        C = self.category
        if g == 0:
            return self._remember(("tau", 0), C.identity(self.F))
        value = C.compose(C.tensor(self.tau, C.identity(self.K.power(g - 1))), self.handles(g - 1))
        return self._remember(("tau", g), value)

    # ======================================================================
    # Correlators
    # ======================================================================

    def correlator(self, g: int, p: int, q: int) -> Morphism:
        """v^g_{p|q}: F^p -> F^q (x) K^g."""
        if min(g, p, q) < 0:
            raise PreconditionViolated("Genus and hole counts must be non-negative", {"g": g, "p": p, "q": q})
        key = (g, p, q)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        C = self.category
        value = C.chain(
            self.multiplication(p),
            self.handles(g),
            C.tensor(self.comultiplication(q), C.identity(self.K.power(g))),
        )
        logger.debug(f"[{self.A.name}] correlator v^{g}_{p}|{q} built")
        with self._lock:
            return self._cache.setdefault(key, value)

    def vector(self, g: int, p: int, q: int) -> Morphism:
        """
        The correlator as a vector 1 -> F^q (x) K^g (x) (F^v)^p.

        Inputs are bent to the right with b_{F^p}, so the i-th incoming
        factor on the right pairs with input p + 1 - i.
        """
        C = self.category
        v = self.correlator(g, p, q)
        if p == 0:
            return v
        Fp = self.F.power(p)
        return C.compose(C.tensor(v, C.identity(Fp.dual())), C.coev(Fp))

    def cached(self) -> List[Tuple[int, int, int]]:
        return sorted(self._cache)
