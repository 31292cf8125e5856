"""
Constant rank, generic kernels and degree functions.

For a plane e and a module N of constant rank on e, the generic kernel is the sum of the kernels of x_N over the
q + 1 lines Kx of e, and deg_N(e) = dim N - dim of the generic kernel. Over a finite field this is a surrogate for
the generic kernel over the algebraic closure; recomputing it over F_{q^2} detects when it is not yet stable.
"""

from typing import Optional, Tuple

import galois
import numpy as np

from rlakit.io.reports import ConstantRankReport, DegreeReport, PlaneCheck, PlaneCheckReport, PlaneValue, RankWitness
from rlakit.linalg.field import field_embedding, field_extension, vector_to_json
from rlakit.linalg.matrix import Subspace, as_ints, batch_rank, kernel_matrix, matmul, row_space, stack_rows
from rlakit.lie.algebra import RestrictedLieAlgebra
from rlakit.u0.module import RepModule, dual, extend_module
from rlakit.utils import NotConstantRankOnPlane, log
from rlakit.variety.points import Plane, e2_points, nullcone_points

MAX_WITNESSES = 2


def over_field(M: RepModule, F=None) -> RepModule:
    "M itself, or M (x) F for a proper extension F of the base field"
    if F is None or F is M.field:
        return M
    return extend_module(M, F)


def plane_over(e: Plane, F) -> Plane:
    "The plane spanned by the same vectors over the extension field F"
    if F is None or F is e.space.field:
        return e
    return Plane(row_space(field_embedding(e.space.field, F)(e.basis)))


def action_stack(M: RepModule, points: galois.FieldArray) -> galois.FieldArray:
    "x_M for every row x of `points`, shape (count, d, d)"
    n, d = M.algebra.n, M.dim
    return matmul(points, M.actions.reshape(n, d * d)).reshape(-1, d, d)


def constant_rank(context, M: RepModule, F=None) -> ConstantRankReport:
    "Ranks of x_M over the nonzero points of V(L)(F)"
    M = over_field(M, F)
    points = nullcone_points(context, M.algebra)
    points = points[np.any(as_ints(points), axis=1)]
    ranks = batch_rank(action_stack(M, points)) if points.shape[0] else np.zeros(0, dtype=np.int64)

    values = sorted(set(ranks.tolist()))
    witnesses = []
    if len(values) > 1:
        for value in values[:MAX_WITNESSES]:
            i = int(np.flatnonzero(ranks == value)[0])
            witnesses.append(RankWitness(point=vector_to_json(M.field, points[i]), rank=value))
    return ConstantRankReport(
        is_constant=len(values) <= 1,
        rank=values[0] if len(values) == 1 else (0 if not values else None),
        points_checked=int(points.shape[0]),
        witnesses=witnesses,
    )


def generic_kernel(context, M: RepModule, e: Plane, F=None) -> Subspace:
    """
    sum_{x in P(e)} ker x_M. Raises NotConstantRankOnPlane when the rank of x_M varies over the lines of e.

    * F: optional extension field; M and e are extended to it first
    """
    M = over_field(M, F)
    e = plane_over(e, M.field)
    lines = e.lines()
    stack = action_stack(M, lines)
    ranks = batch_rank(stack)
    if len(set(ranks.tolist())) > 1:
        raise NotConstantRankOnPlane(
            f"{M} does not have constant rank on the plane {e.label(M.algebra)}",
            ranks=sorted(set(ranks.tolist())),
        )
    kernels = [kernel_matrix(x) for x in stack]
    return row_space(stack_rows(M.field, kernels, M.dim), M.dim)


def degree(context, M: RepModule, e: Plane, F=None) -> int:
    "deg_M(e) = dim M - dim of the generic kernel"
    return M.dim - generic_kernel(context, M, e, F).dim


def degree_with_stability(context, M: RepModule, e: Plane) -> Tuple[int, int, bool]:
    "(degree, generic kernel dimension, whether the kernel dimension is the same over F_{q^2})"
    K = generic_kernel(context, M, e)
    K2 = generic_kernel(context, M, e, field_extension(M.field, 2))
    return M.dim - K.dim, K.dim, K.dim == K2.dim


def _plane_value(L: RestrictedLieAlgebra, e: Plane, value: int) -> PlaneValue:
    return PlaneValue(plane=e.label(L), basis=[vector_to_json(L.field, b) for b in e.basis], value=int(value))


def degree_report(context, M: RepModule, F=None, check_extension: bool = False) -> DegreeReport:
    "deg_M and the generic kernel dimension at every plane of E(2, L)(F)"
    M = over_field(M, F)
    L = M.algebra
    entries, kernel_dims = [], []
    stable = True if check_extension else None
    for e in e2_points(context, L):
        if check_extension:
            deg, kdim, ok = degree_with_stability(context, M, e)
            stable = stable and ok
        else:
            kdim = generic_kernel(context, M, e).dim
            deg = M.dim - kdim
        entries.append(_plane_value(L, e, deg))
        kernel_dims.append(_plane_value(L, e, kdim))
    return DegreeReport(entries=entries, kernel_dims=kernel_dims, stable_under_extension=stable)


def check_degree_duality(context, M: RepModule, F=None, rank: Optional[int] = None) -> PlaneCheckReport:
    "deg_M(e) + deg_{M*}(e) = rk(M) at every plane"
    M = over_field(M, F)
    if rank is None:
        report = constant_rank(context, M)
        if not report.is_constant:
            raise NotConstantRankOnPlane(f"{M} is not of constant rank", ranks=[w.rank for w in report.witnesses])
        rank = report.rank
    Md = dual(M)
    entries = []
    for e in e2_points(context, M.algebra):
        lhs = degree(context, M, e) + degree(context, Md, e)
        entries.append(PlaneCheck(plane=e.label(M.algebra), passed=lhs == rank, lhs=lhs, rhs=rank))
    passed = all(c.passed for c in entries)
    log.info(f"degree duality for {M}: {'passed' if passed else 'FAILED'} on {len(entries)} planes")
    return PlaneCheckReport(name="degree-duality", passed=passed, entries=entries)
