"""
Homomorphisms between modules, through a presentation of the source.

M is covered by the free module A^r, A = U_0(L), sending the k-th basis element to a generator g_k. A module map
f: M -> N is then the same as images y_k = f(g_k) in N that satisfy every relation of the cover:
sum_k rel_k(y_k) = 0 for generators rel = (rel_1, ..., rel_r) of the kernel. These are linear equations in the
coordinates of (y_1, ..., y_r).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import galois
import numpy as np

from rlakit.linalg.matrix import (
    Subspace,
    as_ints,
    inverse,
    invertible_mask,
    kernel_basis,
    matmul,
    row_space,
    rref,
    stack_rows,
)
from rlakit.utils import DimensionMismatch, RlakitError, check_budget, log
from rlakit.variety.points import decode

from .enveloping import U0Algebra, u0_build
from .module import RepModule, monomials, spin
from .radical import composition_factors, top_generators

BATCH_ENTRIES = 1 << 22


class Isomorphism(str, Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


@dataclass
class Presentation:
    """
    * generators: rows (r, d), the images of the free generators
    * cover: the map A^r -> M, shape (d, r p^n); column k p^n + a is e^a g_k
    * pivots: d columns of `cover` forming an invertible matrix, with `pivot_inverse` its inverse
    * kernel: the kernel of `cover`, a subspace of A^r
    * relations: generators of the kernel as a submodule, shape (s, r, p^n)
    """

    generators: galois.FieldArray
    cover: galois.FieldArray
    pivots: Tuple[int, ...]
    pivot_inverse: galois.FieldArray
    kernel: Subspace
    relations: galois.FieldArray

    @property
    def rank(self) -> int:
        return self.generators.shape[0]


def free_images(U: U0Algebra, vectors: galois.FieldArray, r: int) -> galois.FieldArray:
    "e_i v for vectors v of A^r (rows of length r p^n), shape (n, k, r p^n)"
    k = vectors.shape[0]
    blocks = matmul(vectors.reshape(k * r, U.dim), U.left.transpose(0, 2, 1))
    return blocks.reshape(U.n, k, r * U.dim)


def kernel_module(U: U0Algebra, K: Subspace, r: int, name: str = "") -> RepModule:
    "The submodule K of A^r, in the echelon basis of K"
    F = U.field
    if K.dim == 0:
        return RepModule(U.algebra, F.Zeros((U.n, 0, 0)), name)
    images = free_images(U, K.basis, r)
    actions = K.coordinates(images).transpose(0, 2, 1)
    return RepModule(U.algebra, F(np.ascontiguousarray(as_ints(actions))), name)


def _greedy_generators(M: RepModule) -> galois.FieldArray:
    "Standard vectors, each outside the submodule spanned by the previous ones; together they generate M"
    F, d = M.field, M.dim
    chosen = []
    span = row_space(F.Zeros((0, d)), d)
    for j in range(d):
        if span.dim == d:
            break
        v = F.Identity(d)[j]
        if span.contains(v):
            continue
        chosen.append(j)
        span = spin(M, stack_rows(F, [span.basis, v], d))
    return F.Identity(d)[chosen]


def module_generators(context, M: RepModule) -> galois.FieldArray:
    "Generators of M: a minimal set over a local algebra, a greedy one otherwise"
    if u0_build(context, M.algebra).is_local:
        return top_generators(context, M)
    return _greedy_generators(M)


def presentation(context, M: RepModule) -> Presentation:
    cached = M.cache.get("presentation")
    if cached is not None:
        return cached

    U = u0_build(context, M.algebra)
    F, d = M.field, M.dim
    G = module_generators(context, M)
    r = G.shape[0]
    check_budget(r * U.dim, context.heller_budget, "free cover")

    cover = stack_rows(F, [U.orbit(M.actions, g) for g in G], d).T if r else F.Zeros((d, 0))
    _, rk, pivots = rref(cover)
    if rk != d:
        raise RlakitError(f"the generators of {M} span a submodule of dimension {rk}")
    pivot_inverse = inverse(cover[:, list(pivots)])

    K = kernel_basis(cover)
    if K.dim:
        Kmod = kernel_module(U, K, r)
        rel_coords = module_generators(context, Kmod)
        relations = matmul(rel_coords, K.basis).reshape(-1, r, U.dim)
    else:
        relations = F.Zeros((0, r, U.dim))

    result = Presentation(G, cover, pivots, pivot_inverse, K, relations)
    log.debug(f"presentation of {M}: {r} generators, {relations.shape[0]} relations")
    M.cache["presentation"] = result
    return result


def hom_space(context, M: RepModule, N: RepModule) -> galois.FieldArray:
    "A basis of Hom_{U_0(L)}(M, N) as matrices, shape (h, dim N, dim M)"
    if M.algebra != N.algebra:
        raise DimensionMismatch(f"modules over different algebras: {M.algebra} and {N.algebra}")
    F, d, dN = M.field, M.dim, N.dim
    if d == 0 or dN == 0:
        return F.Zeros((0, dN, d))

    U = u0_build(context, M.algebra)
    pres = presentation(context, M)
    r, s = pres.rank, pres.relations.shape[0]
    mon_N = monomials(context, N)

    if s:
        # equation row (relation, row of N), unknown (generator k, coordinate c)
        E = matmul(pres.relations.reshape(s * r, U.dim), mon_N.reshape(U.dim, dN * dN))
        E = E.reshape(s, r, dN, dN).transpose(0, 2, 1, 3).reshape(s * dN, r * dN)
        Y = kernel_basis(E).basis
    else:
        Y = F.Identity(r * dN)
    h = Y.shape[0]
    if h == 0:
        return F.Zeros((0, dN, d))
    Y = Y.reshape(h, r, dN)

    # f(e^a g_k) = e^a y_k on the pivot columns of the cover, then f = Phi pivot_inverse
    Phi = F.Zeros((h, dN, d))
    for idx, c in enumerate(pres.pivots):
        k, a = divmod(c, U.dim)
        Phi[:, :, idx] = matmul(Y[:, k, :], mon_N[a].T)
    return matmul(Phi, pres.pivot_inverse)


def end_space(context, M: RepModule) -> galois.FieldArray:
    cached = M.cache.get("end")
    if cached is None:
        cached = hom_space(context, M, M)
        M.cache["end"] = cached
    return cached


def _combinations(H: galois.FieldArray, coeffs: np.ndarray) -> galois.FieldArray:
    F = type(H)
    h, a, b = H.shape
    return matmul(F(coeffs), H.reshape(h, a * b)).reshape(-1, a, b)


def find_isomorphism(context, H: galois.FieldArray, exhaustive: bool) -> Tuple[galois.FieldArray, bool]:
    """
    An invertible element of the span of H, or None. The second value tells whether the search covered every
    element.
    """
    F = type(H)
    h, d, _ = H.shape
    q = int(F.order)

    mask = invertible_mask(H)
    if mask.any():
        return H[int(np.argmax(mask))], True

    rng = context.rng(5)
    coeffs = rng.integers(0, q, size=(context.isomorphism_samples, h))
    candidates = _combinations(H, coeffs)
    mask = invertible_mask(candidates)
    if mask.any():
        return candidates[int(np.argmax(mask))], True

    if not exhaustive:
        return None, False
    batch = max(1, BATCH_ENTRIES // max(1, d * d))
    for start in range(1, q**h, batch):
        codes = np.arange(start, min(start + batch, q**h))
        candidates = _combinations(H, decode(codes, q, h))
        mask = invertible_mask(candidates)
        if mask.any():
            return candidates[int(np.argmax(mask))], True
    return None, True


def is_isomorphic(context, M: RepModule, N: RepModule) -> Isomorphism:
    """
    False when an invariant differs (dimension, dim Hom(M, N), dim End(M), dim End(N), composition factors).
    Otherwise Hom(M, N) is searched for an invertible element: exhaustively when q^h is at most
    `context.exhaustive_search_limit`, by `context.isomorphism_samples` random elements otherwise.
    """
    if M.algebra != N.algebra:
        raise DimensionMismatch(f"modules over different algebras: {M.algebra} and {N.algebra}")
    if M.dim != N.dim:
        return Isomorphism.FALSE
    if M.dim == 0 or M.is_equal(N):
        return Isomorphism.TRUE
    if M.dim == 1:
        return Isomorphism.TRUE if np.array_equal(as_ints(M.actions), as_ints(N.actions)) else Isomorphism.FALSE

    H = hom_space(context, M, N)
    h = H.shape[0]
    if h == 0 or h != end_space(context, M).shape[0] or h != end_space(context, N).shape[0]:
        return Isomorphism.FALSE
    if composition_factors(context, M) != composition_factors(context, N):
        return Isomorphism.FALSE

    q = int(M.field.order)
    exhaustive = q**h <= context.exhaustive_search_limit
    iso, complete = find_isomorphism(context, H, exhaustive)
    if iso is not None:
        return Isomorphism.TRUE
    if complete:
        return Isomorphism.FALSE
    log.warning(f"no isomorphism {M} -> {N} among {context.isomorphism_samples} samples of a {h}-dimensional Hom")
    return Isomorphism.UNKNOWN
