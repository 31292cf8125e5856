"""
Rational points of V(L), Gr_2(L) and E(2, L) over a finite field.

Vectors of F_q^n are addressed by integer codes (base-q digits, first coordinate most significant), so
that the nullcone can be stored as a boolean table over all codes and planes can be filtered with array lookups.
2-planes are enumerated by their reduced row-echelon representatives, one pivot pair at a time.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, List, Optional, Tuple

import galois
import numpy as np

from rlakit.linalg.field import field_embedding, field_label
from rlakit.linalg.matrix import Subspace, as_ints, full_subspace
from rlakit.lie.algebra import RestrictedLieAlgebra, bracket, pmap
from rlakit.lie.structure import center, cyclic, extend_scalars
from rlakit.utils import DimensionTooSmall, NotPNilpotent, ZeroVector, check_budget, log, progress

BLOCK = 1 << 16


@dataclass(frozen=True)
class Plane:
    "A 2-dimensional subspace, stored by its canonical echelon basis"

    space: Subspace

    @property
    def basis(self) -> galois.FieldArray:
        return self.space.basis

    @cached_property
    def sort_key(self) -> tuple:
        return tuple(as_ints(self.basis).reshape(-1).tolist())

    def __lt__(self, other: "Plane") -> bool:
        return self.sort_key < other.sort_key

    def label(self, L: RestrictedLieAlgebra) -> str:
        return "<" + ", ".join(L.format(b) for b in self.basis) + ">"

    def lines(self) -> galois.FieldArray:
        "Normalized spanning vectors of the q + 1 lines of the plane"
        F = self.space.field
        r1, r2 = self.basis[0], self.basis[1]
        vectors = r1[None, :] + F.elements[:, None] * r2[None, :]
        return F(np.concatenate([as_ints(vectors), as_ints(r2)[None, :]], axis=0))


def _weights(q: int, n: int) -> np.ndarray:
    return q ** np.arange(n - 1, -1, -1, dtype=np.int64)


def encode(vectors, q: int) -> np.ndarray:
    ints = as_ints(vectors)
    return ints @ _weights(q, ints.shape[-1])


def decode(codes: np.ndarray, q: int, n: int) -> np.ndarray:
    return (np.asarray(codes, dtype=np.int64)[:, None] // _weights(q, n)[None, :]) % q


def over_field(L: RestrictedLieAlgebra, F=None) -> RestrictedLieAlgebra:
    "L itself, or L (x) F when F is a proper extension of the base field"
    if F is None or F is L.field:
        return L
    return extend_scalars(L, F)


def grassmannian2_count(n: int, q: int) -> int:
    if n < 2:
        return 0
    return (q**n - 1) * (q**n - q) // ((q**2 - 1) * (q**2 - q))


@lru_cache(maxsize=16)
def _nullcone_mask(L: RestrictedLieAlgebra) -> np.ndarray:
    q, n = int(L.field.order), L.n
    total = q**n
    mask = np.zeros(total, dtype=bool)
    for start in range(0, total, BLOCK):
        codes = np.arange(start, min(start + BLOCK, total), dtype=np.int64)
        X = L.field(decode(codes, q, n))
        mask[start : start + codes.size] = ~np.any(as_ints(pmap(L, X)), axis=-1)
    log.info(f"nullcone of {L} over {field_label(L.field)}: {int(mask.sum())} of {total} vectors")
    return mask


def nullcone_mask(context, L: RestrictedLieAlgebra) -> np.ndarray:
    "mask[code] is True iff the vector with that code is p-nilpotent of exponent one"
    check_budget(int(L.field.order) ** L.n, context.enumeration_budget, "nullcone enumeration")
    return _nullcone_mask(L)


def nullcone_points(context, L: RestrictedLieAlgebra, F=None) -> galois.FieldArray:
    """
    All x with x^[p] = 0 (including 0), sorted by code, as an array of shape (count, n).

    * F: optional extension field; the points of L (x) F are returned
    """
    L = over_field(L, F)
    q = int(L.field.order)
    codes = np.flatnonzero(nullcone_mask(context, L))
    return L.field(decode(codes, q, L.n))


def _plane_batches(n: int, q: int) -> Iterator[Tuple[int, int, np.ndarray, np.ndarray]]:
    "(a, b, rows1, rows2) for every pivot pair a < b, all echelon bases with those pivots"
    for a in range(n):
        for b in range(a + 1, n):
            free1 = [c for c in range(a + 1, n) if c != b]
            free2 = list(range(b + 1, n))
            k1, k2 = len(free1), len(free2)
            total = q ** (k1 + k2)
            for start in range(0, total, BLOCK):
                digits = decode(np.arange(start, min(start + BLOCK, total)), q, k1 + k2)
                m = digits.shape[0]
                R1 = np.zeros((m, n), dtype=np.int64)
                R2 = np.zeros((m, n), dtype=np.int64)
                R1[:, a] = 1
                R2[:, b] = 1
                R1[:, free1] = digits[:, :k1]
                R2[:, free2] = digits[:, k1:]
                yield a, b, R1, R2


def _make_planes(F, a: int, b: int, R1: np.ndarray, R2: np.ndarray) -> List[Plane]:
    n = R1.shape[1]
    return [Plane(Subspace(F, n, F(np.stack([r1, r2])), (a, b))) for r1, r2 in zip(R1, R2)]


def grassmannian2_points(context, n: int, F) -> List[Plane]:
    "Every 2-plane of F^n exactly once, in canonical order"
    if n < 2:
        raise DimensionTooSmall(f"Gr_2 of a space of dimension {n} is empty", n=n)
    q = int(F.order)
    check_budget(grassmannian2_count(n, q), context.enumeration_budget, "Gr_2 enumeration")
    planes = []
    for a, b, R1, R2 in _plane_batches(n, q):
        planes.extend(_make_planes(F, a, b, R1, R2))
    return sorted(planes)


def e2_points(context, L: RestrictedLieAlgebra, F=None) -> List[Plane]:
    """
    E(2, L): planes e with [e, e] = 0 and e^[p] = 0, in canonical order.

    Both echelon rows must lie in the nullcone and commute. On an abelian plane the p-map is semilinear, so
    the two rows decide every member.
    """
    L = over_field(L, F)
    F, n, q = L.field, L.n, int(L.field.order)
    if n < 2:
        return []
    check_budget(grassmannian2_count(n, q), context.enumeration_budget, "E(2) enumeration")
    mask = nullcone_mask(context, L)
    weights = _weights(q, n)

    planes = []
    batches = _plane_batches(n, q)
    for a, b, R1, R2 in progress(batches, context, desc="E(2)"):
        keep = mask[R1 @ weights] & mask[R2 @ weights]
        if not keep.any():
            continue
        R1, R2 = R1[keep], R2[keep]
        if not L.is_abelian:
            comm = as_ints(bracket(L, F(R1), F(R2)))
            keep = ~np.any(comm, axis=1)
            R1, R2 = R1[keep], R2[keep]
        planes.extend(_make_planes(F, a, b, R1, R2))

    planes.sort()
    log.info(f"E(2) of {L} over {field_label(F)}: {len(planes)} planes")
    return planes


def e2_through(context, L: RestrictedLieAlgebra, z0: galois.FieldArray, F=None) -> List[Plane]:
    """
    E(2, L)_{z0}, the planes containing z0.

    * z0: a nonzero element of L with z0^[p] = 0, given over the base field of L
    """
    if not np.any(as_ints(z0)):
        raise ZeroVector("z0 must be nonzero")
    if np.any(as_ints(pmap(L, z0))):
        raise NotPNilpotent(f"{L.format(z0)} is not p-nilpotent of exponent one")
    if not center(L).space.contains(z0):
        log.warning(f"{L.format(z0)} is not central")
    if F is not None and F is not L.field:
        z0 = field_embedding(L.field, F)(z0)
    return [e for e in e2_points(context, L, F) if e.space.contains(z0)]


def is_cyclic(context, L: RestrictedLieAlgebra, S: Optional[Subspace] = None) -> bool:
    "Whether the p-subalgebra S (default: L) is (Kx)_p for some x in S"
    S = S if S is not None else full_subspace(L.field, L.n)
    if S.dim == 0:
        return True
    if np.any(as_ints(bracket(L, S.basis[:, None, :], S.basis[None, :, :]))):
        return False
    F, q = L.field, int(L.field.order)
    check_budget(q**S.dim, context.exhaustive_search_limit, "cyclic vector search")
    for code in range(1, q**S.dim):
        x = F(decode(np.array([code]), q, S.dim))[0] @ S.basis
        if cyclic(L, x).dim == S.dim:
            return True
    return False
