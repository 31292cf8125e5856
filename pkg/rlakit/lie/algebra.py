"""
Restricted Lie algebras given by structure constants and the p-map on a basis.

Elements are coordinate vectors (galois arrays of length n); every operation also accepts a batch of
elements stacked along the first axis. The p-map of a general element is never stored: it is computed by peeling
one basis summand at a time with Jacobson's formula.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Tuple

import galois
import numpy as np

from rlakit.linalg.field import coerce, field_label
from rlakit.linalg.matrix import as_ints
from rlakit.utils import DimensionMismatch

CHUNK = 20000


@dataclass(frozen=True, eq=False)
class RestrictedLieAlgebra:
    """
    * field: a galois FieldArray class
    * names: the basis labels
    * bracket_table: c[i, j] = coordinates of [e_i, e_j], shape (n, n, n)
    * pmap_table: P[i] = coordinates of e_i^[p], shape (n, n)
    """

    field: type
    names: Tuple[str, ...]
    bracket_table: galois.FieldArray
    pmap_table: galois.FieldArray

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def p(self) -> int:
        return int(self.field.characteristic)

    @cached_property
    def key(self) -> tuple:
        return (
            int(self.field.order),
            tuple(as_ints(self.field.irreducible_poly.coeffs).tolist()) if self.field.degree > 1 else (),
            self.names,
            as_ints(self.bracket_table).tobytes(),
            as_ints(self.pmap_table).tobytes(),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, RestrictedLieAlgebra) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"RestrictedLieAlgebra({field_label(self.field)}, basis={list(self.names)})"

    @cached_property
    def bracket_flat(self) -> galois.FieldArray:
        "c reshaped to (n, n*n): row i is the matrix of ad-like coefficients of e_i"
        n = self.n
        return self.bracket_table.reshape(n, n * n)

    @cached_property
    def is_abelian(self) -> bool:
        return not np.any(as_ints(self.bracket_table))

    def zero(self, *batch: int) -> galois.FieldArray:
        return self.field.Zeros(batch + (self.n,))

    def basis_vector(self, i: int) -> galois.FieldArray:
        v = self.zero()
        v[i] = 1
        return v

    def element(self, coords: Sequence[int]) -> galois.FieldArray:
        v = coerce(self.field, coords)
        if v.shape != (self.n,):
            raise DimensionMismatch(f"expected {self.n} coordinates, got {len(coords)}")
        return v

    def format(self, v) -> str:
        "Human-readable form of an element, e.g. `h+2*c0`"
        terms = []
        for name, a in zip(self.names, np.asarray(v).reshape(-1).tolist()):
            if a == 0:
                continue
            terms.append(name if a == 1 else f"{a}*{name}")
        return "+".join(terms) if terms else "0"


def make_algebra(F, names: Sequence[str], brackets: dict, pmaps: dict) -> RestrictedLieAlgebra:
    """
    * brackets: {(i, j): coordinates of [e_i, e_j]} for i < j; antisymmetry fills the rest
    * pmaps: {i: coordinates of e_i^[p]}; missing entries are 0
    Coordinates are integers (reduced mod p) or field arrays.
    """
    n = len(names)
    C = F.Zeros((n, n, n))
    for (i, j), v in brackets.items():
        v = v if isinstance(v, galois.FieldArray) else coerce(F, v)
        C[i, j] = v
        C[j, i] = -v
    P = F.Zeros((n, n))
    for i, v in pmaps.items():
        P[i] = v if isinstance(v, galois.FieldArray) else coerce(F, v)
    return RestrictedLieAlgebra(F, tuple(names), C, P)


def _check(L: RestrictedLieAlgebra, *xs):
    for x in xs:
        if x.shape[-1] != L.n:
            raise DimensionMismatch(f"element of length {x.shape[-1]} in an algebra of dimension {L.n}")


def _broadcast(L: RestrictedLieAlgebra, x, y):
    x, y = np.broadcast_arrays(as_ints(x), as_ints(y))
    return L.field(np.ascontiguousarray(x)), L.field(np.ascontiguousarray(y))


def bracket(L: RestrictedLieAlgebra, x: galois.FieldArray, y: galois.FieldArray) -> galois.FieldArray:
    "[x, y], batched over leading axes (x and y broadcast against each other)"
    _check(L, x, y)
    n = L.n
    x, y = _broadcast(L, x, y)
    shape = x.shape
    if n == 0:
        return L.field.Zeros(shape)
    x2, y2 = x.reshape(-1, n), y.reshape(-1, n)
    out = L.field.Zeros(x2.shape)
    for start in range(0, x2.shape[0], CHUNK):
        xs, ys = x2[start : start + CHUNK], y2[start : start + CHUNK]
        B = (xs @ L.bracket_flat).reshape(-1, n, n)  # B[b, j, k] = coord k of [x_b, e_j]
        out[start : start + CHUNK] = (ys[:, :, None] * B).sum(axis=1)
    return out.reshape(shape)


def ad_matrix(L: RestrictedLieAlgebra, x: galois.FieldArray) -> galois.FieldArray:
    "Matrix of ad(x); column j is [x, e_j]"
    _check(L, x)
    n = L.n
    return (x.reshape(1, n) @ L.bracket_flat).reshape(n, n).T


def ad_basis(L: RestrictedLieAlgebra) -> List[galois.FieldArray]:
    return [L.bracket_table[i].T.copy() for i in range(L.n)]


def jacobson_si(L: RestrictedLieAlgebra, x: galois.FieldArray, y: galois.FieldArray) -> List[galois.FieldArray]:
    """
    s_1(x, y) .. s_{p-1}(x, y), from ad(x T + y)^{p-1}(x) = sum_i i s_i(x, y) T^{i-1}, computed with
    Element-valued polynomials in T. Batched over leading axes.
    """
    _check(L, x, y)
    p = L.p
    F = L.field
    x, y = _broadcast(L, x, y)
    if L.is_abelian:
        return [F.Zeros(x.shape) for _ in range(p - 1)]

    poly = [x]
    for _ in range(p - 1):
        nxt = [bracket(L, y, poly[0])]
        for k in range(1, len(poly)):
            nxt.append(bracket(L, y, poly[k]) + bracket(L, x, poly[k - 1]))
        nxt.append(bracket(L, x, poly[-1]))
        poly = nxt
    # poly[k] is the coefficient of T^k; only T^0 .. T^{p-2} can be nonzero
    return [poly[i - 1] * (F(i % p) ** -1) for i in range(1, p)]


def pmap(L: RestrictedLieAlgebra, x: galois.FieldArray, iterations: int = 1) -> galois.FieldArray:
    "x^{[p]^iterations}, batched over leading axes"
    _check(L, x)
    for _ in range(iterations):
        x = _pmap_once(L, x)
    return x


def _pmap_once(L: RestrictedLieAlgebra, x: galois.FieldArray) -> galois.FieldArray:
    n, p = L.n, L.p
    F = L.field
    shape = x.shape
    if n == 0:
        return F.Zeros(shape)
    x2 = F(as_ints(x)).reshape(-1, n)
    out = F.Zeros(x2.shape)
    for start in range(0, x2.shape[0], CHUNK):
        xs = x2[start : start + CHUNK]
        res = F.Zeros(xs.shape)
        partial = F.Zeros(xs.shape)
        for i in range(n):
            a = xs[:, i]
            if not np.any(as_ints(a)):
                continue
            summand = F.Zeros(xs.shape)
            summand[:, i] = a
            res = res + (a**p)[:, None] * L.pmap_table[i][None, :]
            if not L.is_abelian and np.any(as_ints(partial)):
                for s in jacobson_si(L, partial, summand):
                    res = res + s
            partial = partial + summand
        out[start : start + CHUNK] = res
    return out.reshape(shape)


def pmap_polynomial(L: RestrictedLieAlgebra, u: galois.FieldArray, w: galois.FieldArray) -> List[galois.FieldArray]:
    """
    Coefficients of the polynomial (u + T w)^[p] in T, lowest degree first (p + 1 entries).

    s_i(u, T w) = T^{p-i} s_i(u, w), so the coefficient of T^{p-i} is s_i(u, w) for 1 <= i <= p-1.
    """
    p = L.p
    s = jacobson_si(L, u, w)
    coeffs = [pmap(L, u)]
    for k in range(1, p):
        coeffs.append(s[p - k - 1])
    coeffs.append(pmap(L, w))
    return coeffs
