from dataclasses import dataclass
from typing import List, Tuple

import galois
import numpy as np

from rlakit.io.reports import AlgebraInfo
from rlakit.linalg.field import field_embedding, field_label, vector_to_json
from rlakit.linalg.matrix import (
    Subspace,
    as_ints,
    full_subspace,
    inverse,
    kernel_basis,
    matmul,
    rank,
    row_space,
    stack_rows,
    zero_subspace,
)
from rlakit.utils import NotAnIdeal, NotPClosed, log

from .algebra import RestrictedLieAlgebra, ad_basis, bracket, pmap
from .axioms import require_axioms


@dataclass(frozen=True)
class PSubalgebra:
    space: Subspace
    is_ideal: bool
    is_abelian: bool
    is_elementary_abelian: bool
    is_p_closed: bool = True

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> galois.FieldArray:
        return self.space.basis


def span_brackets(L: RestrictedLieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    "The span of [a, b] over basis vectors a of A and b of B"
    if A.dim == 0 or B.dim == 0:
        return zero_subspace(L.field, L.n)
    products = bracket(L, A.basis[:, None, :], B.basis[None, :, :])
    return row_space(products.reshape(-1, L.n), L.n)


def _flags(L: RestrictedLieAlgebra, S: Subspace) -> PSubalgebra:
    if S.dim == 0:
        return PSubalgebra(S, True, True, True, True)
    full = full_subspace(L.field, L.n)
    is_ideal = S.contains_subspace(span_brackets(L, full, S))
    is_abelian = span_brackets(L, S, S).dim == 0
    powers = pmap(L, S.basis)
    is_p_closed = S.contains(powers) and S.contains_subspace(span_brackets(L, S, S))
    is_elementary_abelian = is_abelian and not np.any(as_ints(powers))
    return PSubalgebra(S, is_ideal, is_abelian, is_elementary_abelian, is_p_closed)


def psubalgebra(L: RestrictedLieAlgebra, S: Subspace) -> PSubalgebra:
    "Wraps a subspace together with its flags; raises NotPClosed when it is no p-subalgebra"
    sub = _flags(L, S)
    if not sub.is_p_closed:
        raise NotPClosed(f"{S} is not a p-subalgebra")
    return sub


def center(L: RestrictedLieAlgebra) -> PSubalgebra:
    "Intersection of the kernels of all ad(e_i)"
    n = L.n
    if n == 0:
        return _flags(L, zero_subspace(L.field, 0))
    stacked = stack_rows(L.field, ad_basis(L), n)
    C = kernel_basis(stacked)
    sub = _flags(L, C)
    if not sub.is_p_closed:
        log.warning("the center is not closed under the p-map; the p-map data is not restricted")
    return sub


def derived_series(L: RestrictedLieAlgebra) -> List[PSubalgebra]:
    series = [full_subspace(L.field, L.n)]
    while True:
        nxt = span_brackets(L, series[-1], series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return [_flags(L, S) for S in series]


def lower_central_series(L: RestrictedLieAlgebra) -> List[PSubalgebra]:
    full = full_subspace(L.field, L.n)
    series = [full]
    while True:
        nxt = span_brackets(L, full, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return [_flags(L, S) for S in series]


def _is_nilpotent_space(L: RestrictedLieAlgebra, S: Subspace) -> bool:
    current = S
    for _ in range(L.n + 1):
        if current.dim == 0:
            return True
        nxt = span_brackets(L, S, current)
        if nxt == current:
            return False
        current = nxt
    return current.dim == 0


def is_nilpotent(L: RestrictedLieAlgebra) -> bool:
    return _is_nilpotent_space(L, full_subspace(L.field, L.n))


def is_unipotent(L: RestrictedLieAlgebra) -> bool:
    """
    L is nilpotent and every basis vector is p-nilpotent. In a nilpotent restricted Lie algebra the p-nilpotent
    elements form a p-ideal, so this covers every element. A p-nilpotent x dies after at most n iterations.
    Equivalent to the layered test on the derived series: the Jacobson corrections are commutators, so the p-map
    induces a semilinear map on each layer, and L is unipotent iff every layer map is nilpotent.
    """
    if L.n == 0:
        return True
    if not is_nilpotent(L):
        return False
    basis = L.field.Identity(L.n)
    return not np.any(as_ints(pmap(L, basis, iterations=L.n)))


def is_supersolvable(L: RestrictedLieAlgebra) -> bool:
    "The derived algebra is nilpotent"
    if L.n == 0:
        return True
    full = full_subspace(L.field, L.n)
    return _is_nilpotent_space(L, span_brackets(L, full, full))


def is_torus(L: RestrictedLieAlgebra) -> bool:
    "Abelian with an injective (semilinear) p-map"
    if L.n == 0:
        return True
    return L.is_abelian and rank(L.pmap_table) == L.n


def p_closure(L: RestrictedLieAlgebra, S: Subspace) -> PSubalgebra:
    current = S
    while True:
        if current.dim == 0:
            return _flags(L, current)
        extra = [span_brackets(L, current, current).basis, pmap(L, current.basis)]
        nxt = row_space(stack_rows(L.field, [current.basis] + extra, L.n), L.n)
        if nxt == current:
            return _flags(L, current)
        current = nxt


def cyclic(L: RestrictedLieAlgebra, x: galois.FieldArray) -> PSubalgebra:
    "span{x, x^[p], x^[p]^2, ...}"
    vectors = [x.reshape(1, L.n)]
    S = row_space(vectors[0], L.n)
    while True:
        y = pmap(L, vectors[-1])
        T = row_space(stack_rows(L.field, [S.basis, y], L.n), L.n)
        if T.dim == S.dim:
            return _flags(L, S)
        vectors.append(y)
        S = T


def is_p_ideal(L: RestrictedLieAlgebra, S: Subspace) -> bool:
    sub = _flags(L, S)
    return sub.is_ideal and sub.is_p_closed


def normalizer(L: RestrictedLieAlgebra, S: Subspace) -> PSubalgebra:
    "{x : [x, S] in S}, as the kernel of the quotient coordinates of [b_k, x] for the basis b_k of S"
    n = L.n
    if S.dim == 0 or S.dim == n:
        return _flags(L, full_subspace(L.field, n))
    blocks = []
    for b in S.basis:
        # row j: quotient coordinates of [b, e_j]
        images = bracket(L, b[None, :], L.field.Identity(n))
        blocks.append(S.quotient_coordinates(images).T)
    return _flags(L, kernel_basis(stack_rows(L.field, blocks, n)))


def quotient(L: RestrictedLieAlgebra, I: Subspace) -> Tuple[RestrictedLieAlgebra, galois.FieldArray]:
    """
    L / I on the complement basis of standard vectors at the non-pivot columns of I.
    Returns the quotient algebra and the projection matrix (dim L/I x dim L).
    """
    if not is_p_ideal(L, I):
        raise NotAnIdeal(f"{I} is not a p-ideal of {L}")
    comp = list(I.complement)
    F, n, m = L.field, L.n, len(comp)
    C = F.Zeros((m, m, m))
    if m:
        for a, i in enumerate(comp):
            C[a] = I.quotient_coordinates(L.bracket_table[i][comp])
        P = I.quotient_coordinates(L.pmap_table[comp])
    else:
        P = F.Zeros((0, 0))
    Q = require_axioms(RestrictedLieAlgebra(F, tuple(L.names[i] for i in comp), C, P), "quotient")
    projection = I.quotient_coordinates(F.Identity(n)).T
    return Q, projection


def subalgebra_structure(L: RestrictedLieAlgebra, S: Subspace) -> RestrictedLieAlgebra:
    """
    The restricted structure induced on a p-subalgebra, in the echelon basis of S. Basis vectors that are
    standard vectors keep their names.
    """
    sub = _flags(L, S)
    if not sub.is_p_closed:
        raise NotPClosed(f"{S} is not a p-subalgebra")
    F, k = L.field, S.dim
    names = tuple(L.format(b) for b in S.basis)
    if k == 0:
        return RestrictedLieAlgebra(F, (), F.Zeros((0, 0, 0)), F.Zeros((0, 0)))
    products = bracket(L, S.basis[:, None, :], S.basis[None, :, :])
    C = S.coordinates(products.reshape(-1, L.n)).reshape(k, k, k)
    P = S.coordinates(pmap(L, S.basis))
    return RestrictedLieAlgebra(F, names, C, P)


def extend_scalars(L: RestrictedLieAlgebra, E) -> RestrictedLieAlgebra:
    "L (x) E for an extension field E of the base field"
    embed = field_embedding(L.field, E)
    return RestrictedLieAlgebra(E, L.names, embed(L.bracket_table), embed(L.pmap_table))


def rebase(L: RestrictedLieAlgebra, B: galois.FieldArray, names=None) -> RestrictedLieAlgebra:
    "The same algebra in the basis given by the rows of the invertible matrix B"
    n = L.n
    B_inv = inverse(B)
    products = bracket(L, B[:, None, :], B[None, :, :]).reshape(n * n, n)
    C = matmul(products, B_inv).reshape(n, n, n)
    P = matmul(pmap(L, B), B_inv)
    return RestrictedLieAlgebra(L.field, tuple(names or (L.format(b) for b in B)), C, P)


def algebra_info(L: RestrictedLieAlgebra, name: str = "") -> AlgebraInfo:
    "Dimension, center, series and structural predicates"
    return AlgebraInfo(
        name=name,
        field=field_label(L.field),
        dimension=L.n,
        basis=list(L.names),
        center=[vector_to_json(L.field, b) for b in center(L).basis],
        derived_series_dims=[S.dim for S in derived_series(L)],
        lower_central_series_dims=[S.dim for S in lower_central_series(L)],
        nilpotent=is_nilpotent(L),
        unipotent=is_unipotent(L),
        supersolvable=is_supersolvable(L),
        torus=is_torus(L),
    )
