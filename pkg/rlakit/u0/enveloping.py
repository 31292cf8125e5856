"""
The restricted enveloping algebra U_0(L) in the PBW basis e^a = e_1^{a_1} ... e_n^{a_n}, 0 <= a_i < p.

Monomials are indexed by their exponent vectors read as base-p numbers, first exponent most significant: the unit
has index 0 and the top monomial index p^n - 1. Products come from straightening e_i e^a: either e_i can be put in
front directly, or e_i^p is replaced by e_i^[p], or e_i is moved past the first factor e_j of e^a, with
[e_i, e_j] as the correction term.
"""

from functools import cached_property, lru_cache
from typing import Tuple

import galois
import numpy as np

from rlakit.linalg.matrix import as_ints, inverse, matmul
from rlakit.lie.algebra import RestrictedLieAlgebra
from rlakit.lie.structure import is_unipotent
from rlakit.utils import RlakitError, check_budget, log


class U0Algebra:
    def __init__(self, L: RestrictedLieAlgebra) -> None:
        self.algebra = L
        self.field = L.field
        self.p, self.n = L.p, L.n
        self.dim = self.p**self.n
        self.strides = self.p ** np.arange(self.n - 1, -1, -1, dtype=np.int64)
        self._memo = {}
        self.left = self._left_matrices()
        """
        left[i] is the matrix of left multiplication by e_i in the monomial basis, shape (n, p^n, p^n).
        These are also the actions of the left regular module.
        """

    def __repr__(self) -> str:
        return f"U0Algebra({self.algebra!r}, dim={self.dim})"

    def exponents(self, index: int) -> np.ndarray:
        return (index // self.strides) % self.p

    def index(self, exponents) -> int:
        return int(np.asarray(exponents, dtype=np.int64) @ self.strides)

    @property
    def top(self) -> int:
        return self.dim - 1

    def unit_vector(self, index: int = 0) -> galois.FieldArray:
        v = self.field.Zeros(self.dim)
        v[index] = 1
        return v

    def _first(self, index: int) -> int:
        nz = np.flatnonzero(self.exponents(index))
        return int(nz[0]) if nz.size else self.n

    def _last(self, index: int) -> int:
        nz = np.flatnonzero(self.exponents(index))
        return int(nz[-1]) if nz.size else -1

    def _gen_times(self, i: int, b: int) -> galois.FieldArray:
        "e_i e^b as a coordinate vector"
        key = (i, b)
        hit = self._memo.get(key)
        if hit is not None:
            return hit

        L = self.algebra
        a = self.exponents(b)
        j = self._first(b)
        if j >= i:
            if a[i] + 1 < self.p:
                out = self.unit_vector(b + int(self.strides[i]))
            else:
                out = self._combine(L.pmap_table[i], b - (self.p - 1) * int(self.strides[i]))
        else:
            rest = b - int(self.strides[j])
            out = self._left_times(j, self._gen_times(i, rest)) + self._combine(L.bracket_table[i, j], rest)

        self._memo[key] = out
        return out

    def _combine(self, coeffs: galois.FieldArray, b: int) -> galois.FieldArray:
        "sum_k coeffs[k] e_k e^b"
        out = self.field.Zeros(self.dim)
        for k in np.flatnonzero(as_ints(coeffs)):
            out = out + coeffs[k] * self._gen_times(int(k), b)
        return out

    def _left_times(self, j: int, v: galois.FieldArray) -> galois.FieldArray:
        out = self.field.Zeros(self.dim)
        for b in np.flatnonzero(as_ints(v)):
            out = out + v[b] * self._gen_times(j, int(b))
        return out

    def _left_matrices(self) -> galois.FieldArray:
        out = self.field.Zeros((self.n, self.dim, self.dim))
        for b in range(self.dim):
            for i in range(self.n):
                out[i, :, b] = self._gen_times(i, b)
        self._memo.clear()
        return out

    def product(self, u: galois.FieldArray, v: galois.FieldArray) -> galois.FieldArray:
        "u v for coordinate vectors u, v"
        out = self.field.Zeros(self.dim)
        for a in np.flatnonzero(as_ints(u)):
            w = v
            for i, e in reversed(list(enumerate(self.exponents(int(a))))):
                for _ in range(int(e)):
                    w = self.left[i] @ w
            out = out + u[a] * w
        return out

    def monomial_actions(self, actions: galois.FieldArray) -> galois.FieldArray:
        """
        rho(e^a) for every monomial, shape (p^n, d, d), from the generator actions rho(e_i).
        e^a = e_j e^{a - unit_j} with j the first nonzero exponent.
        """
        d = actions.shape[1]
        out = self.field.Zeros((self.dim, d, d))
        out[0] = self.field.Identity(d)
        for idx in range(1, self.dim):
            j = self._first(idx)
            out[idx] = matmul(actions[j], out[idx - int(self.strides[j])])
        return out

    def orbit(self, actions: galois.FieldArray, v: galois.FieldArray) -> galois.FieldArray:
        "rho(e^a) v for every monomial, shape (p^n, d)"
        out = self.field.Zeros((self.dim, v.shape[0]))
        out[0] = v
        for idx in range(1, self.dim):
            j = self._first(idx)
            out[idx] = actions[j] @ out[idx - int(self.strides[j])]
        return out

    @property
    def is_local(self) -> bool:
        return is_local(self.algebra)

    @cached_property
    def regular_monomials(self) -> galois.FieldArray:
        "Left multiplication by every monomial, shape (p^n, p^n, p^n)"
        return self.monomial_actions(self.left)

    @cached_property
    def gram(self) -> galois.FieldArray:
        """
        G[b, c] = lambda(e^b e^c), with lambda the coefficient of the top monomial, a Frobenius form of U_0(L).
        Row b is computed from e^b = e^{b - unit_k} e_k, k the last nonzero exponent.
        """
        G = self.field.Zeros((self.dim, self.dim))
        G[0, self.top] = 1
        for b in range(1, self.dim):
            k = self._last(b)
            G[b] = G[b - int(self.strides[k])] @ self.left[k]
        return G

    @cached_property
    def gram_inverse(self) -> galois.FieldArray:
        try:
            return inverse(self.gram)
        except np.linalg.LinAlgError:
            raise RlakitError(f"the top coefficient is no Frobenius form of {self}")

    @cached_property
    def socle_word(self) -> Tuple[int, ...]:
        """
        Generator indices (i_1, ..., i_k), applied in this order to 1, whose product e_{i_k} ... e_{i_1} spans
        the socle of the local algebra U_0(L). Found greedily: a nonzero element killed by every e_i lies in the
        socle.
        """
        if not self.is_local:
            raise RlakitError(f"{self} is not local")
        v = self.unit_vector(0)
        word = []
        for _ in range(self.dim):
            for i in range(self.n):
                w = self.left[i] @ v
                if np.any(as_ints(w)):
                    word.append(i)
                    v = w
                    break
            else:
                break
        return tuple(word)

    @cached_property
    def socle_element(self) -> galois.FieldArray:
        v = self.unit_vector(0)
        for i in self.socle_word:
            v = self.left[i] @ v
        return v


@lru_cache(maxsize=64)
def is_local(L: RestrictedLieAlgebra) -> bool:
    "U_0(L) is local iff L is unipotent"
    return is_unipotent(L)


@lru_cache(maxsize=8)
def _u0(L: RestrictedLieAlgebra) -> U0Algebra:
    U = U0Algebra(L)
    log.info(f"built U_0 of {L}: dimension {U.dim}")
    return U


def u0_build(context, L: RestrictedLieAlgebra) -> U0Algebra:
    "U_0(L), cached per algebra. Raises BudgetExceeded when p^n exceeds `context.u0_budget`."
    check_budget(L.p**L.n, context.u0_budget, "dim U_0")
    return _u0(L)
