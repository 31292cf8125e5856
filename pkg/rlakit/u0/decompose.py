"""
Krull-Remak-Schmidt decomposition.

An endomorphism phi of M splits M = im phi^d (+) ker phi^d (Fitting); the projection onto the first summand along
the second is an idempotent of End(M). M is indecomposable iff End(M) is local, i.e. iff End(M)/J(End(M)) is a
division algebra, which is certified from the radical of End(M).
"""

from typing import List, Optional

import galois
import numpy as np

from rlakit.linalg.matrix import (
    as_ints,
    column_space,
    invertible_mask,
    kernel_basis,
    matmul,
    matrix_power,
    row_space,
    stack_rows,
)
from rlakit.linalg.radical import algebra_radical
from rlakit.utils import check_budget, log
from rlakit.variety.points import decode

from .hom import end_space
from .module import RepModule, submodule

RANDOM_TRIES = 16


def fitting_split(M: RepModule, phi: galois.FieldArray) -> Optional[List[RepModule]]:
    "[im phi^d, ker phi^d] as modules when both are nonzero"
    power = matrix_power(phi, M.dim)
    image = column_space(power)
    if image.dim in (0, M.dim):
        return None
    return [submodule(M, image), submodule(M, kernel_basis(power))]


def _residue_representatives(E: galois.FieldArray, J) -> galois.FieldArray:
    "Elements of E whose classes form a basis of E / J"
    F = type(E)
    h, d, _ = E.shape
    span = J
    chosen = []
    for x in E.reshape(h, d * d):
        if not span.contains(x):
            chosen.append(as_ints(x))
            span = row_space(stack_rows(F, [span.basis, x], d * d), d * d)
    return F(np.array(chosen).reshape(-1, d, d)) if chosen else F.Zeros((0, d, d))


def _split_once(context, M: RepModule) -> Optional[List[RepModule]]:
    if M.dim <= 1:
        return None
    E = end_space(context, M)
    h = E.shape[0]
    if h <= 1:
        return None

    for phi in E:
        parts = fitting_split(M, phi)
        if parts:
            return parts
    F, q = M.field, int(M.field.order)
    rng = context.rng(7)
    for _ in range(RANDOM_TRIES):
        phi = matmul(F(rng.integers(0, q, size=(1, h))), E.reshape(h, -1)).reshape(M.dim, M.dim)
        parts = fitting_split(M, phi)
        if parts:
            return parts

    # End(M) is local iff End(M)/J is a division algebra: every nonzero residue class is invertible
    J = algebra_radical([], basis=E)
    R = _residue_representatives(E, J)
    k = R.shape[0]
    if k <= 1:
        return None
    # every nonzero residue class has to be tested before M counts as indecomposable
    check_budget(q**k, context.exhaustive_search_limit, f"certifying {M} indecomposable (End(M)/J of dimension {k})")
    codes = np.arange(1, q**k)
    elements = matmul(F(decode(codes, q, k)), R.reshape(k, -1)).reshape(-1, M.dim, M.dim)
    singular = ~invertible_mask(elements)
    for i in np.flatnonzero(singular):
        parts = fitting_split(M, elements[i])
        if parts:
            return parts
    return None


def decompose(context, M: RepModule) -> List[RepModule]:
    "Indecomposable summands of M, each certified by a local endomorphism algebra, ordered by dimension"
    check_budget(M.dim, context.decompose_budget, "decompose")
    if M.dim == 0:
        return []
    work, done = [M], []
    while work:
        X = work.pop()
        parts = _split_once(context, X)
        if parts is None:
            done.append(X)
        else:
            work.extend(parts)
    done.sort(key=lambda S: S.dim)
    log.debug(f"decomposed {M}: summands of dimensions {[S.dim for S in done]}")
    return done


def is_indecomposable(context, M: RepModule) -> bool:
    return M.dim > 0 and _split_once(context, M) is None
