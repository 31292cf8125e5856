from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Tuple

import galois
import numpy as np

from rlakit.utils import DimensionMismatch


def as_ints(m) -> np.ndarray:
    return np.asarray(m.view(np.ndarray) if isinstance(m, galois.FieldArray) else m, dtype=np.int64)


def rref(m: galois.FieldArray) -> Tuple[galois.FieldArray, int, Tuple[int, ...]]:
    """
    Reduced row-echelon form of a 2-d field array.

    Returns `(R, rank, pivots)`. `R` has the same shape as `m`, its first `rank` rows are the nonzero rows.
    """
    F = type(m)
    if m.ndim != 2:
        raise DimensionMismatch(f"rref expects a matrix, got shape {m.shape}")

    rows, cols = m.shape
    p = int(F.characteristic)
    prime = F.degree == 1
    A = as_ints(m).copy() if prime else m.copy()

    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(as_ints(A[r:, c]) if not prime else A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]

        if prime:
            inv = pow(int(A[r, c]), p - 2, p)
            A[r, c:] = (A[r, c:] * inv) % p
            factors = A[:, c].copy()
            factors[r] = 0
            nzr = np.flatnonzero(factors)
            if nzr.size:
                A[nzr, c:] = (A[nzr, c:] - factors[nzr, None] * A[r, c:][None, :]) % p
        else:
            A[r, c:] = A[r, c:] / A[r, c]
            factors = A[:, c].copy()
            factors[r] = 0
            nzr = np.flatnonzero(as_ints(factors))
            if nzr.size:
                A[nzr, c:] = A[nzr, c:] - factors[nzr, None] * A[r, c:][None, :]
        pivots.append(c)
        r += 1

    R = F(A) if prime else A
    return R, r, tuple(pivots)


def rank(m: galois.FieldArray) -> int:
    if m.size == 0:
        return 0
    return rref(m)[1]


def kernel_matrix(m: galois.FieldArray) -> galois.FieldArray:
    "Rows form a basis of the right kernel `{x : m x = 0}` (not necessarily in echelon form)"
    F = type(m)
    rows, cols = m.shape
    if rows == 0:
        return F.Identity(cols)
    R, r, pivots = rref(m)
    free = [c for c in range(cols) if c not in set(pivots)]
    K = F.Zeros((len(free), cols))
    if not free:
        return K
    K[np.arange(len(free)), free] = 1
    if r:
        K[:, list(pivots)] = -R[:r][:, free].T
    return K


def identity(F, n: int) -> galois.FieldArray:
    return F.Identity(n)


def kron(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    ra, ca = a.shape
    rb, cb = b.shape
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(ra * rb, ca * cb)


def block_diag(blocks: Sequence[galois.FieldArray]) -> galois.FieldArray:
    F = type(blocks[0])
    n = sum(b.shape[0] for b in blocks)
    m = sum(b.shape[1] for b in blocks)
    out = F.Zeros((n, m))
    i = j = 0
    for b in blocks:
        out[i : i + b.shape[0], j : j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def inverse(m: galois.FieldArray) -> galois.FieldArray:
    F = type(m)
    n = m.shape[0]
    if m.shape != (n, n):
        raise DimensionMismatch(f"cannot invert a {m.shape} matrix")
    aug = F(np.concatenate([as_ints(m), as_ints(F.Identity(n))], axis=1))
    R, r, pivots = rref(aug)
    if r < n or pivots[n - 1] != n - 1:
        raise np.linalg.LinAlgError("matrix is singular")
    return R[:, n:]


def matrix_power(m: galois.FieldArray, e: int) -> galois.FieldArray:
    F = type(m)
    result = F.Identity(m.shape[0])
    base = m
    while e > 0:
        if e & 1:
            result = matmul(result, base)
        e >>= 1
        if e:
            base = matmul(base, base)
    return result


def stack_rows(F, parts: Sequence[galois.FieldArray], cols: int) -> galois.FieldArray:
    "Vertical concatenation that tolerates empty parts"
    parts = [as_ints(x).reshape(-1, cols) for x in parts]
    if not parts:
        return F.Zeros((0, cols))
    return F(np.concatenate(parts, axis=0))


@dataclass(frozen=True, eq=False)
class Subspace:
    """
    A subspace of F^n stored by its reduced row-echelon basis. Two subspaces are equal iff their
    representatives are equal.
    """

    field: type
    ambient_dim: int
    basis: galois.FieldArray
    pivots: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @cached_property
    def key(self) -> tuple:
        return (int(self.field.order), self.ambient_dim, as_ints(self.basis).tobytes())

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={as_ints(self.basis).tolist()})"

    @cached_property
    def complement(self) -> Tuple[int, ...]:
        "Columns that are not pivots; the standard basis vectors at these columns span a complement"
        pivots = set(self.pivots)
        return tuple(c for c in range(self.ambient_dim) if c not in pivots)

    def reduce(self, v: galois.FieldArray) -> galois.FieldArray:
        "Reduces the rows of `v` modulo the subspace, so that they vanish at every pivot column"
        if self.dim == 0:
            return v.copy()
        return v - v[..., list(self.pivots)] @ self.basis

    def contains(self, v: galois.FieldArray) -> bool:
        return not np.any(as_ints(self.reduce(v)))

    def contains_subspace(self, other: "Subspace") -> bool:
        return other.dim == 0 or self.contains(other.basis)

    def coordinates(self, v: galois.FieldArray) -> galois.FieldArray:
        "Coordinates of members of the subspace in the echelon basis"
        return v[..., list(self.pivots)]

    def quotient_coordinates(self, v: galois.FieldArray) -> galois.FieldArray:
        "Coordinates of the classes of `v` in the quotient, w.r.t. the standard complement"
        return self.reduce(v)[..., list(self.complement)]


def row_space(m: galois.FieldArray, cols: int = None) -> Subspace:
    F = type(m)
    if cols is None:
        cols = m.shape[-1]
    m = m.reshape(-1, cols)
    if m.shape[0] == 0:
        return Subspace(F, cols, F.Zeros((0, cols)), ())
    R, r, pivots = rref(m)
    return Subspace(F, cols, R[:r].copy(), pivots)


def zero_subspace(F, n: int) -> Subspace:
    return Subspace(F, n, F.Zeros((0, n)), ())


def full_subspace(F, n: int) -> Subspace:
    return Subspace(F, n, F.Identity(n), tuple(range(n)))


def kernel_basis(m: galois.FieldArray) -> Subspace:
    "The right kernel of `m` as a canonical subspace"
    return row_space(kernel_matrix(m), m.shape[1])


def column_space(m: galois.FieldArray) -> Subspace:
    return row_space(m.T, m.shape[0])


def _check_same(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim or a.field is not b.field:
        raise DimensionMismatch(f"subspaces of different ambient spaces: {a.ambient_dim} and {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same(a, b)
    return row_space(stack_rows(a.field, [a.basis, b.basis], a.ambient_dim), a.ambient_dim)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """
    Zassenhaus: reduce [[A, A], [B, 0]]; the rows whose left half vanishes span the intersection
    in their right half.
    """
    _check_same(a, b)
    F, n = a.field, a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return zero_subspace(F, n)
    A, B = as_ints(a.basis), as_ints(b.basis)
    top = np.concatenate([A, A], axis=1)
    bottom = np.concatenate([B, np.zeros_like(B)], axis=1)
    R, r, pivots = rref(F(np.concatenate([top, bottom], axis=0)))
    rows = [i for i in range(r) if pivots[i] >= n]
    return row_space(R[rows][:, n:], n) if rows else zero_subspace(F, n)


def matmul(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    """
    a @ b for field matrices or stacks of matrices. Over prime fields the product is formed in float64 (BLAS)
    whenever every accumulated sum stays below 2^52, which makes it exact.
    """
    F = type(a)
    p = int(F.characteristic)
    if F.degree == 1 and a.shape[-1] * (p - 1) ** 2 < 2**52:
        x = np.matmul(as_ints(a).astype(np.float64), as_ints(b).astype(np.float64))
        return F(np.fmod(x, p).astype(np.int64))
    if a.ndim == 2 and b.ndim == 2:
        return a @ b
    shape = np.matmul(np.zeros(a.shape, dtype=np.int8), np.zeros(b.shape, dtype=np.int8)).shape
    if 0 in shape:
        return F.Zeros(shape)
    if a.ndim == 2:
        return F(np.stack([as_ints(a @ y) for y in b]))
    if b.ndim == 2:
        return F(np.stack([as_ints(x @ b) for x in a]))
    return F(np.stack([as_ints(x @ y) for x, y in zip(a, b)]))


def batch_rank(stack: galois.FieldArray) -> np.ndarray:
    """
    Ranks of a stack of matrices (b, rows, cols). Over prime fields all matrices are eliminated at once, one
    column per step.
    """
    F = type(stack)
    b, rows, cols = stack.shape
    if F.degree > 1:
        return np.array([rank(m) for m in stack], dtype=np.int64)

    p = int(F.characteristic)
    inv = np.array([0] + [pow(x, p - 2, p) for x in range(1, p)], dtype=np.int64)
    A = as_ints(stack) % p
    r = np.zeros(b, dtype=np.int64)
    idx = np.arange(b)
    row_ids = np.arange(rows)
    for c in range(cols):
        mask = (A[:, :, c] != 0) & (row_ids[None, :] >= r[:, None])
        has = mask.any(axis=1)
        if not has.any():
            continue
        sel, rs = idx[has], r[has]
        piv = np.argmax(mask[has], axis=1)
        first = A[sel, rs, :].copy()
        A[sel, rs, :] = A[sel, piv, :]
        A[sel, piv, :] = first
        pivot_rows = (A[sel, rs, :] * inv[A[sel, rs, c]][:, None]) % p
        A[sel, rs, :] = pivot_rows
        factors = A[sel, :, c].copy()
        factors[np.arange(sel.size), rs] = 0
        A[sel] = (A[sel] - factors[:, :, None] * pivot_rows[:, None, :]) % p
        r[has] += 1
    return r


def invertible_mask(stack: galois.FieldArray) -> np.ndarray:
    "For a stack of square matrices (b, d, d), whether each one is invertible"
    return batch_rank(stack) == stack.shape[1]
