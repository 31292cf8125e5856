import itertools
from typing import List, Tuple

import numpy as np

from rlakit.io.reports import IntersectionCheck, MaximalReport
from rlakit.linalg.matrix import as_ints, full_subspace, kernel_basis, subspace_intersect
from rlakit.lie.algebra import RestrictedLieAlgebra, pmap
from rlakit.lie.structure import PSubalgebra, center, is_unipotent, psubalgebra, span_brackets
from rlakit.utils import DimensionTooSmall, NotUnipotent, check_budget, log

from .points import Plane, decode, e2_points, is_cyclic


def _label(L: RestrictedLieAlgebra, S) -> str:
    return "<" + ", ".join(L.format(b) for b in S.basis) + ">"


def maxp_with_planes(context, L: RestrictedLieAlgebra) -> List[Tuple[PSubalgebra, List[Plane]]]:
    """
    Max_p(L) for unipotent L, each subalgebra together with its E(2) points.

    The candidates are the hyperplanes containing [L, L] that are closed under the p-map, i.e. the kernels of
    the functionals on L/[L, L] that kill every p-th power. E(2, m) is read off E(2, L).
    """
    if not is_unipotent(L):
        raise NotUnipotent(f"{L} is not unipotent")
    if L.n < 3:
        raise DimensionTooSmall(f"Max_p needs dimension at least 3, got {L.n}", n=L.n)

    F, n, q = L.field, L.n, int(L.field.order)
    full = full_subspace(F, n)
    derived = span_brackets(L, full, full)
    functionals = kernel_basis(derived.basis)
    m = functionals.dim
    check_budget(q**m, context.enumeration_budget, "Max_p enumeration")

    planes = e2_points(context, L)
    out = []
    for code in range(1, q**m):
        coords = decode(np.array([code]), q, m)[0]
        if coords[np.flatnonzero(coords)[0]] != 1:
            continue
        phi = F(coords) @ functionals.basis
        H = kernel_basis(phi[None, :])
        if np.any(as_ints(pmap(L, H.basis) @ phi)):
            continue
        inside = [e for e in planes if H.contains_subspace(e.space)]
        if inside:
            out.append((psubalgebra(L, H), inside))

    out.sort(key=lambda item: tuple(as_ints(item[0].basis).reshape(-1).tolist()))
    log.info(f"Max_p of {L}: {len(out)} subalgebras")
    return out


def maxp(context, L: RestrictedLieAlgebra) -> List[PSubalgebra]:
    return [m for m, _ in maxp_with_planes(context, L)]


def maximal_report(context, L: RestrictedLieAlgebra) -> MaximalReport:
    """
    Max_p(L) with the intersection checks: for m != n whose E(2) points are disjoint, m n n is cyclic and
    dim m / (C(L) n m) <= 2; in addition dim L / C(L) <= 3.
    """
    items = maxp_with_planes(context, L)
    C = center(L).space
    checks = []
    for (m, em), (k, ek) in itertools.combinations(items, 2):
        if set(em) & set(ek):
            continue
        meet = subspace_intersect(m.space, k.space)
        meet_cyclic = is_cyclic(context, L, meet)
        quotient_dim = m.dim - subspace_intersect(C, m.space).dim
        checks.append(
            IntersectionCheck(
                first=_label(L, m),
                second=_label(L, k),
                intersection_dim=meet.dim,
                intersection_cyclic=meet_cyclic,
                first_mod_center_dim=quotient_dim,
                passed=meet_cyclic and quotient_dim <= 2,
            )
        )

    return MaximalReport(
        subalgebras=[_label(L, m) for m, _ in items],
        e2_counts=[len(planes) for _, planes in items],
        center_codim=L.n - C.dim,
        center_codim_at_most_3=L.n - C.dim <= 3,
        checks=checks,
    )
