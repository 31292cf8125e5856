"""
Splitting off projective summands.

Local case (L unipotent): with s spanning the socle of U_0(L), a free summand U_0(L) m of M is detected by s m != 0.
If S = rho(s) has rank r, the pivot columns of S give m_1..m_r, and functionals f_1..f_r with f_i(s m_j) = delta_ij
split the free module they generate: M = (+) U_0 m_j (+) {x : (f_i rho(u)) x = 0 for all u, i}.

General case: U_0(L) is a Frobenius algebra with form lambda (top coefficient) and Gram matrix G. For m in M and a
functional f, g(u) = f(u m) defines an element a of U_0(L) via lambda(u a) = g(u). The map u -> u m factors through
right multiplication by a, so whenever a is not nilpotent the Fitting decomposition of psi = R_a splits a
projective summand A psi^N off M. M has no projective summand iff every such a is nilpotent, i.e. iff the trace
ideal (the span of these a) is nilpotent.
"""

from dataclasses import dataclass, field
from typing import List

import numpy as np

from rlakit.linalg.matrix import (
    as_ints,
    column_space,
    inverse,
    kernel_basis,
    matmul,
    matrix_power,
    rank,
    rref,
)
from rlakit.linalg.radical import is_nilpotent_span
from rlakit.utils import RlakitError, check_budget, log

from .enveloping import U0Algebra, u0_build
from .module import RepModule, monomials, spin, submodule

MAX_RANDOM_PAIRS = 50


@dataclass
class Stripped:
    "M = core (+) projectives, with the dimensions of the indecomposable projective summands"

    core: RepModule
    projective_dims: List[int] = field(default_factory=list)

    @property
    def proj_mult(self) -> int:
        return len(self.projective_dims)


def strip_projectives(context, M: RepModule) -> Stripped:
    cached = M.cache.get("stripped")
    if cached is not None:
        return cached
    U = u0_build(context, M.algebra)
    if M.dim == 0:
        result = Stripped(M)
    elif U.is_local:
        result = _strip_local(U, M)
    else:
        result = _strip_frobenius(context, U, M)
    if result.projective_dims:
        log.debug(f"{M}: split off projectives {result.projective_dims}, core dimension {result.core.dim}")
    M.cache["stripped"] = result
    return result


def is_projective(context, M: RepModule) -> bool:
    return strip_projectives(context, M).core.dim == 0


def free_rank(context, M: RepModule) -> int:
    "Number of free summands of a module over a local U_0(L)"
    U = u0_build(context, M.algebra)
    if not U.is_local:
        raise RlakitError(f"free rank is only defined over a local algebra, not {U}")
    return rank(M.word(U.socle_word)) if M.dim else 0


def _strip_local(U: U0Algebra, M: RepModule) -> Stripped:
    F, d = M.field, M.dim
    S = M.word(U.socle_word)
    _, r, pivots = rref(S)
    if r == 0:
        return Stripped(M)

    V = S[:, list(pivots)]  # s m_j for the generators m_j at the pivot columns
    _, _, rows = rref(V.T.copy())
    f = F.Zeros((r, d))
    f[:, list(rows)] = inverse(V[list(rows), :])
    W = spin(M, f, side="right")
    complement = kernel_basis(W.basis)
    if complement.dim != d - r * U.dim:
        raise RlakitError(f"splitting {r} free summands off {M} left a complement of dimension {complement.dim}")
    return Stripped(submodule(M, complement, f"core({M.name})"), [U.dim] * r)


def _candidates(context, F, d: int, pivots):
    "(f, m) pairs of functional and vector: first from pivot positions of the trace map, then random"
    for c in pivots:
        f, m = F.Zeros(d), F.Zeros(d)
        f[c // d] = 1
        m[c % d] = 1
        yield f, m
    rng = context.rng(3)
    for _ in range(MAX_RANDOM_PAIRS):
        yield F(rng.integers(0, F.order, size=d)), F(rng.integers(0, F.order, size=d))


def _strip_frobenius(context, U: U0Algebra, M: RepModule) -> Stripped:
    F = M.field
    core, dims = M, []
    check_budget(U.dim**3, context.enumeration_budget, "regular monomial table")
    Ginv = U.gram_inverse
    regular = U.regular_monomials.reshape(U.dim, U.dim * U.dim)

    while core.dim:
        d = core.dim
        mon = monomials(context, core)  # (P, d, d)
        # column (i, j): the element a with lambda(u a) = (rho(u))[i, j]
        T_all = matmul(Ginv, mon.reshape(U.dim, d * d))
        T = column_space(T_all)
        if is_nilpotent_span(matmul(T.basis, regular).reshape(-1, U.dim, U.dim)):
            break

        _, _, pivots = rref(T_all)
        split = None
        for f, m in _candidates(context, F, d, pivots):
            alpha = matmul(mon, m.reshape(d, 1)).reshape(U.dim, d).T  # column c: rho(e^c) m
            B = matmul(Ginv, matmul(f.reshape(1, d), mon).reshape(U.dim, d))  # B x = a for x = u m
            psi = matmul(B, alpha)
            power = matrix_power(psi, U.dim)
            if np.any(as_ints(power)):
                split = alpha, B, power
                break
        if split is None:
            raise RlakitError(f"no projective summand found in {core} although its trace ideal is not nilpotent")

        alpha, B, power = split
        image = column_space(power)
        summand = column_space(matmul(alpha, image.basis.T))
        # x belongs to the complement iff B x lies in the kernel of psi^N
        K = kernel_basis(power)
        Z = K.quotient_coordinates(F.Identity(U.dim)).T
        complement = kernel_basis(matmul(Z, B))

        P = submodule(core, summand)
        dims.extend(_projective_dims(context, P))
        core = submodule(core, complement, f"core({M.name})")

    return Stripped(core, sorted(dims))


def _projective_dims(context, P: RepModule) -> List[int]:
    if P.dim > context.decompose_budget:
        return [P.dim]
    from .decompose import decompose

    return [S.dim for S in decompose(context, P)]
