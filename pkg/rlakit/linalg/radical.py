"""
Jacobson radical of a matrix algebra over a finite field.

Over F_p this is the iterated trace-condition method: starting from the whole algebra A,

    I_i = {a in I_{i-1} : g_i(a b) = 0 for all b in A},    g_i(y) = (Tr(Y^{p^i}) mod p^{i+1}) / p^i,

with Y an integer lift of y. The maps a -> g_i(a b) are F_p-linear on I_{i-1}, I_0 is the radical of the trace
form, and I_l = J(A) for p^l <= d < p^{l+1}. The loop stops early as soon as some I_i is nilpotent, since
J(A) is contained in every I_i. Over F_{p^k} the algebra is viewed as an F_p-algebra (scalars act by their
multiplication matrices), which has the same radical.
"""

from typing import Optional, Sequence

import galois
import numpy as np

from rlakit.utils import RadicalCheckFailed, log

from .matrix import Subspace, as_ints, full_subspace, kernel_matrix, matmul, row_space, stack_rows, zero_subspace


def algebra_closure(generators: Sequence[galois.FieldArray], F=None, d: int = None) -> Subspace:
    "The unital algebra generated by `generators`, as a subspace of flattened d x d matrices"
    if generators:
        F, d = type(generators[0]), generators[0].shape[0]
    current = row_space(F.Identity(d).reshape(1, d * d), d * d)
    frontier = current.basis.reshape(-1, d, d)
    while frontier.shape[0]:
        products = [matmul(g, f).reshape(1, d * d) for g in generators for f in frontier]
        if not products:
            break
        candidates = current.reduce(stack_rows(F, products, d * d))
        new = row_space(candidates, d * d)
        if new.dim == 0:
            break
        current = row_space(stack_rows(F, [current.basis, new.basis], d * d), d * d)
        frontier = new.basis.reshape(-1, d, d)
    return current


def is_nilpotent_span(elements: galois.FieldArray) -> bool:
    """
    * elements: field array of shape (m, d, d) spanning an ideal of some matrix algebra
    Tests nilpotency by the chain V > IV > I(IV) > ... on the natural module.
    """
    m, d, _ = elements.shape
    if m == 0:
        return True
    F = type(elements)
    V = full_subspace(F, d)
    flat = elements.reshape(m * d, d)
    for _ in range(d + 1):
        images = matmul(flat, V.basis.T).reshape(m, d, V.dim).transpose(0, 2, 1).reshape(-1, d)
        S = row_space(images, d)
        if S.dim == 0:
            return True
        if S == V:
            return False
        V = S
    return False


def _mm_mod(a: np.ndarray, b: np.ndarray, modulus: int) -> np.ndarray:
    if a.shape[-1] * (modulus - 1) ** 2 < 2**52:
        return np.fmod(np.matmul(a.astype(np.float64), b.astype(np.float64)), modulus).astype(np.int64)
    return np.matmul(a, b) % modulus


def _trace_gram_level(I_basis: np.ndarray, A_basis: np.ndarray, p: int, level: int) -> np.ndarray:
    "Matrix G[j, l] = g_level(x_j b_l) over F_p"
    m_i, d, _ = I_basis.shape
    m_a = A_basis.shape[0]
    if level == 0:
        # Tr(x b) = sum_rs x[r, s] b[s, r]
        X = I_basis.reshape(m_i, d * d)
        B = A_basis.transpose(0, 2, 1).reshape(m_a, d * d)
        return _mm_mod(X, B.T, p)

    modulus = p ** (level + 1)
    scale = p**level
    G = np.zeros((m_i, m_a), dtype=np.int64)
    for j in range(m_i):
        Y = _mm_mod(I_basis[j][None, :, :], A_basis, modulus)
        for _ in range(level):
            # raise to the p-th power `level` times
            P = Y.copy()
            for _ in range(p - 1):
                P = _mm_mod(P, Y, modulus)
            Y = P
        traces = np.trace(Y, axis1=1, axis2=2) % modulus
        if np.any(traces % scale):
            log.debug(f"radical level {level}: trace not divisible by {scale}; lift-dependent value")
        G[j] = (traces // scale) % p
    return G


def _radical_prime(A_basis: np.ndarray, p: int) -> np.ndarray:
    "Radical of the F_p-algebra spanned by `A_basis` (m, d, d). Returns a spanning array (r, d, d)"
    m, d, _ = A_basis.shape
    F = galois.GF(p)
    I_basis = A_basis
    level = 0
    while True:
        G = _trace_gram_level(I_basis, A_basis, p, level)
        # left kernel: combinations c with c G = 0
        coeffs = as_ints(kernel_matrix(F(G.T)))
        I_basis = np.einsum("cj,jrs->crs", coeffs, I_basis) % p
        log.debug(f"radical level {level}: dim {I_basis.shape[0]}")
        if is_nilpotent_span(F(I_basis)) or p ** (level + 1) > d:
            return I_basis
        level += 1


def _scalar_blocks(F, k: int) -> np.ndarray:
    "Multiplication matrices over F_p (k x k) of every element of F, indexed by integer representation"
    p = int(F.characteristic)
    basis = F(p ** np.arange(k))  # 1, t, t^2, ...
    elems = F.elements
    out = np.zeros((F.order, k, k), dtype=np.int64)
    for col in range(k):
        products = elems * basis[col]
        digits = as_ints(products)
        for row in range(k):
            out[:, row, col] = digits % p
            digits = digits // p
    return out


def check_radical(elements: galois.FieldArray, J: Subspace) -> Subspace:
    "Returns J after checking that it is a nilpotent two-sided ideal of the unital algebra generated by `elements`"
    m, d, _ = elements.shape
    if J.dim == 0:
        return J
    R = J.basis.reshape(-1, d, d)
    for i, a in enumerate(elements):
        for side, products in (("left", matmul(a, R)), ("right", matmul(R, a))):
            if np.any(as_ints(J.reduce(products.reshape(-1, d * d)))):
                raise RadicalCheckFailed(
                    f"the radical is not closed under {side} multiplication by algebra element {i}", index=i, side=side
                )
    if not is_nilpotent_span(R):
        raise RadicalCheckFailed(f"the radical of dimension {J.dim} is not nilpotent", dim=J.dim)
    return J


def algebra_radical(
    generators: Sequence[galois.FieldArray], basis: Optional[galois.FieldArray] = None, F=None, d: int = None
) -> Subspace:
    """
    Jacobson radical of the unital algebra generated by `generators` (all d x d over the same field).

    * basis: optional (m, d, d) array known to span the algebra; skips the closure computation
    Returns a subspace of the space of flattened d x d matrices, checked by `check_radical`.
    """
    if generators:
        F, d = type(generators[0]), generators[0].shape[0]
    elif basis is not None:
        F, d = type(basis), basis.shape[1]

    if basis is None:
        basis = algebra_closure(list(generators), F, d).basis.reshape(-1, d, d)
    p, k = int(F.characteristic), int(F.degree)
    if d == 0:
        return zero_subspace(F, 0)
    multipliers = F(np.stack([as_ints(g) for g in generators])) if generators else basis

    if k == 1:
        J = _radical_prime(as_ints(basis) % p, p)
        return check_radical(multipliers, row_space(F(J.reshape(-1, d * d)), d * d))

    blocks = _scalar_blocks(F, k)
    ints = as_ints(basis)
    m = ints.shape[0]
    # (m, d, d, k, k) -> (m, d*k, d*k)
    big = blocks[ints].transpose(0, 1, 3, 2, 4).reshape(m, d * k, d * k)
    t_block = np.kron(np.eye(d, dtype=np.int64), blocks[p])
    GFp = galois.GF(p)
    gens = [GFp(x) for x in big] + [GFp(t_block)]
    closure = algebra_closure(gens, GFp, d * k).basis.reshape(-1, d * k, d * k)
    J = _radical_prime(as_ints(closure), p)
    if J.shape[0] == 0:
        return zero_subspace(F, d * d)

    # the F_q entry (i, j) is read off the first column of block (i, j)
    cols = J.reshape(-1, d, k, d, k)[:, :, :, :, 0]  # (r, d, k, d)
    weights = p ** np.arange(k)
    entries = np.einsum("rikj,k->rij", cols, weights)
    return check_radical(multipliers, row_space(F(entries.reshape(-1, d * d)), d * d))
