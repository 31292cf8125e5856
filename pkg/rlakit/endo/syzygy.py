"""
Syzygy functions.

For an endotrivial M and a plane e, M|_e = Omega^s(K) (+) (free) for a unique integer s = s_M(e). The core of M|_e
is walked back to K with Heller shifts; away from K exactly one direction makes the core smaller, and the
number of steps gives |s|. Walking with Omega^{-1} means the core was Omega^s(K) with s > 0.
"""

from typing import Optional

import numpy as np

from rlakit.io.reports import PlaneCheck, PlaneCheckReport, PlaneValue, SyzygyReport
from rlakit.linalg.field import vector_to_json
from rlakit.linalg.matrix import as_ints
from rlakit.lie.structure import is_unipotent
from rlakit.u0.heller import cosyzygy, heller, syzygy
from rlakit.u0.hom import Isomorphism, is_isomorphic
from rlakit.u0.module import RepModule, restrict, trivial_module
from rlakit.u0.projective import strip_projectives
from rlakit.u0.radical import radical, socle
from rlakit.utils import (
    DimensionDivisibleByP,
    EmptyE2,
    NotEndotrivialOnPlane,
    UnknownIsomorphism,
    WalkDepthExceeded,
    log,
)
from rlakit.variety.graph import graph_report, incidence_graph
from rlakit.variety.points import Plane, e2_points

from .endotrivial import is_endotrivial
from .rank import degree, over_field, plane_over


def _is_trivial(N: RepModule) -> bool:
    return N.dim == 1 and not np.any(as_ints(N.actions))


def _shrinking_step(context, N: RepModule):
    """
    (step, sign) for the Heller shift that makes the projective-free module N smaller: dim Omega(N) is
    p^2 dim top(N) - dim N and dim Omega^{-1}(N) is p^2 dim soc(N) - dim N over a plane.
    """
    size = N.algebra.p ** N.algebra.n
    down = (N.dim - radical(context, N).dim) * size - N.dim
    up = socle(context, N).dim * size - N.dim
    if down < N.dim and down < up:
        return syzygy, -1
    if up < N.dim and up < down:
        return cosyzygy, 1
    raise NotEndotrivialOnPlane(
        f"no Heller shift shrinks {N}: dimensions {down} and {up} from {N.dim}", dims=[down, up]
    )


def syzygy_value(context, M: RepModule, e: Plane, F=None, depth: Optional[int] = None) -> int:
    """
    s_M(e), certified by an isomorphism M|_e core = Omega^s(K).

    * F: optional extension field; M and e are extended to it first
    * depth: longest walk (default `context.walk_depth`)
    """
    M = over_field(M, F)
    e = plane_over(e, M.field)
    depth = context.walk_depth if depth is None else depth
    label = e.label(M.algebra)

    N = strip_projectives(context, restrict(M, e.space)).core
    if N.dim * N.dim <= context.endotrivial_tensor_limit and not is_endotrivial(context, N):
        raise NotEndotrivialOnPlane(f"{M} is not endotrivial on {label}", plane=label)
    if N.dim == 1:
        if not _is_trivial(N):
            raise NotEndotrivialOnPlane(f"{M} restricts to a non-trivial character on {label}", plane=label)
        return 0

    step, sign = _shrinking_step(context, N)
    current, steps = N, 0
    while current.dim > 1:
        if steps >= depth:
            raise WalkDepthExceeded(f"{M} on {label}: no trivial core within {depth} steps", plane=label, depth=depth)
        nxt = step(context, current)
        if nxt.dim >= current.dim:
            raise NotEndotrivialOnPlane(f"{M} on {label}: the Heller walk stopped shrinking at {current.dim}")
        current, steps = nxt, steps + 1
        log.debug(f"{M} on {label}: step {steps}, core dimension {current.dim}")
    if not _is_trivial(current):
        raise NotEndotrivialOnPlane(f"{M} on {label}: the walk ends in a non-trivial module", plane=label)

    s = sign * steps
    answer = is_isomorphic(context, N, heller(context, trivial_module(N.algebra), s))
    if answer is Isomorphism.UNKNOWN:
        raise UnknownIsomorphism(f"could not certify s = {s} for {M} on {label}", plane=label, value=s)
    if answer is Isomorphism.FALSE:
        raise NotEndotrivialOnPlane(f"{M} on {label}: the core is not Omega^{s}(K)", plane=label, value=s)
    return s


def syzygy_function(context, M: RepModule, F=None) -> SyzygyReport:
    "s_M on every plane of E(2, L)(F)"
    M = over_field(M, F)
    L = M.algebra
    planes = e2_points(context, L)
    if not planes:
        raise EmptyE2(f"E(2) of {L} is empty")

    entries = []
    for e in planes:
        s = syzygy_value(context, M, e)
        entries.append(PlaneValue(plane=e.label(L), basis=[vector_to_json(L.field, b) for b in e.basis], value=s))
    constant = len({v.value for v in entries}) == 1

    candidate = False
    if not constant and is_unipotent(L):
        graph = incidence_graph(context, L, planes)
        if graph_report(context, L, graph).status == "connected":
            candidate = True
            log.warning(f"{M}: non-constant syzygy function on a connected pencil graph")
    log.info(f"syzygy function of {M}: {[v.value for v in entries]}")
    return SyzygyReport(entries=entries, constant=constant, contradiction_candidate=candidate)


def predicted_degree_times_2p(p: int, dim: int, s: int) -> int:
    "The right-hand side of 2p deg_M(e) in terms of dim M and s_M(e), for dim M = 1 or -1 mod p"
    if dim % p == 1:
        return (p - 1) * (dim - 1 - p * s)
    if dim % p == p - 1:
        return (p - 1) * (dim + 1) - p * (s + 1)
    raise DimensionDivisibleByP(f"dimension {dim} is not 1 or -1 mod {p}", dim=dim, p=p)


def check_syz3(context, M: RepModule, F=None) -> PlaneCheckReport:
    "2p deg_M(e) against the value predicted by dim M and s_M(e), at every plane"
    M = over_field(M, F)
    L = M.algebra
    p = L.p
    if M.dim % p == 0:
        raise DimensionDivisibleByP(f"dimension {M.dim} is divisible by {p}", dim=M.dim, p=p)
    if M.dim % p not in (1, p - 1):
        raise DimensionDivisibleByP(f"dimension {M.dim} is not 1 or -1 mod {p}", dim=M.dim, p=p)
    planes = e2_points(context, L)
    if not planes:
        raise EmptyE2(f"E(2) of {L} is empty")

    entries = []
    for e in planes:
        deg = degree(context, M, e)
        s = syzygy_value(context, M, e)
        lhs, rhs = 2 * p * deg, predicted_degree_times_2p(p, M.dim, s)
        entries.append(
            PlaneCheck(plane=e.label(L), passed=lhs == rhs, lhs=lhs, rhs=rhs, detail=f"deg={deg}, s={s}")
        )
    passed = all(c.passed for c in entries)
    log.info(f"degree formula for {M}: {'passed' if passed else 'FAILED'} on {len(entries)} planes")
    return PlaneCheckReport(name="degree-formula", passed=passed, entries=entries)
