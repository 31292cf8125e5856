"""
Classification of endotrivial modules over supersolvable algebras as Omega^n(K_lambda) (+) (proj.).

The projective-free core is walked with Omega and with Omega^{-1} side by side until one of the walks reaches a
1-dimensional module K_lambda. If Omega^k(core) = K_lambda then core = Omega^{-k}(K_lambda). The answer is
re-verified by an isomorphism with Omega^n(K_lambda).
"""

from typing import Optional

from rlakit.io.reports import ClassificationResult
from rlakit.linalg.field import field_label, vector_to_json
from rlakit.linalg.matrix import as_ints
from rlakit.lie.structure import is_supersolvable
from rlakit.u0.heller import cosyzygy, heller, syzygy
from rlakit.u0.hom import Isomorphism, is_isomorphic
from rlakit.u0.module import RepModule, character_module, characters
from rlakit.u0.projective import strip_projectives
from rlakit.u0.radical import composition_factors
from rlakit.utils import (
    BudgetExceeded,
    NotEndotrivial,
    NotSplit,
    NotSupersolvable,
    UnknownIsomorphism,
    log,
)

from .endotrivial import is_endotrivial
from .rank import over_field


def _check_endotrivial(context, M: RepModule):
    try:
        ok = is_endotrivial(context, M)
    except BudgetExceeded:
        log.warning(f"{M}: skipping the tensor test for endotriviality, relying on the isomorphism check")
        return
    if not ok:
        raise NotEndotrivial(f"{M} is not endotrivial")


def _walk(context, core: RepModule, depth: int):
    "(n, K_lambda) with core = Omega^n(K_lambda), or None within `depth` steps in each direction"
    if core.dim == 1:
        return 0, core
    walks = {-1: core, 1: core}  # sign of n: Omega walks give negative n
    for k in range(1, depth + 1):
        for sign in list(walks):
            step = syzygy if sign < 0 else cosyzygy
            try:
                walks[sign] = step(context, walks[sign])
            except BudgetExceeded as e:
                log.debug(f"{core}: stopping the {'Omega' if sign < 0 else 'Omega^-1'} walk at step {k}: {e}")
                del walks[sign]
                continue
            log.debug(f"{core}: step {sign * k}, dimension {walks[sign].dim}")
            if walks[sign].dim == 1:
                return sign * k, walks[sign]
        if not walks:
            break
    return None


def classify_endotrivial(
    context, M: RepModule, F=None, depth: Optional[int] = None, force: bool = False
) -> ClassificationResult:
    """
    (n, lambda, projective summands) with M = Omega^n(K_lambda) (+) (proj.).

    * F: optional extension field to classify over
    * depth: longest walk in each direction (default `context.walk_depth`)
    * force: run on algebras that are not supersolvable as well
    """
    M = over_field(M, F)
    L = M.algebra
    depth = context.walk_depth if depth is None else depth
    if not force and not is_supersolvable(L):
        raise NotSupersolvable(f"{L} is not supersolvable")
    _check_endotrivial(context, M)

    stripped = strip_projectives(context, M)
    core = stripped.core
    if core.dim == 0:
        raise NotEndotrivial(f"{M} is projective")
    factors = composition_factors(context, core)
    if max(factors) > 1:
        raise NotSplit(
            f"{M} has composition factors of dimensions {sorted(set(factors))} over {field_label(L.field)}",
            suggested_degree=max(factors),
        )

    common = dict(proj_mult=stripped.proj_mult, projective_dims=stripped.projective_dims, core_dim=core.dim)
    found = _walk(context, core, depth)
    if found is None:
        log.info(f"{M}: no 1-dimensional module within {depth} Heller steps")
        reason = f"no 1-dimensional module within {depth} steps"
        return ClassificationResult(status="no_match", reason=reason, **common)

    n, end = found
    lam = end.actions[:, 0, 0]
    if not any((as_ints(lam) == as_ints(chi)).all() for chi in characters(context, L)):
        raise NotEndotrivial(f"{M}: the walk ended in a 1-dimensional module that is not a character")

    answer = is_isomorphic(context, core, heller(context, character_module(L, lam), n))
    if answer is Isomorphism.UNKNOWN:
        raise UnknownIsomorphism(f"could not certify {M} = Omega^{n}(K_lambda) (+) (proj.)", n=n)
    if answer is Isomorphism.FALSE:
        log.warning(f"{M}: the core is not isomorphic to Omega^{n}(K_lambda)")
        reason = f"Omega^{n}(K_lambda) is not isomorphic to the core"
        return ClassificationResult(status="no_match", reason=reason, **common)

    if not is_supersolvable(L):
        log.warning(f"{L} is not supersolvable; the classification was forced")
    log.info(f"{M} = Omega^{n}(K{as_ints(lam).tolist()}) + {stripped.proj_mult} projective summands")
    return ClassificationResult(status="classified", n=n, lambda_=vector_to_json(L.field, lam), **common)
