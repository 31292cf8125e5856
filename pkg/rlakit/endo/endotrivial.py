import numpy as np

from rlakit.linalg.matrix import as_ints
from rlakit.u0.module import RepModule, dual, tensor
from rlakit.u0.projective import strip_projectives
from rlakit.utils import BudgetExceeded, log


def is_endotrivial(context, M: RepModule) -> bool:
    """
    Whether M (x) M* = K (+) (proj.). Its projective-free core must be the trivial module, which for a
    1-dimensional module means that every basis element of L acts by zero.
    """
    if M.dim == 0:
        return False
    size = M.dim * M.dim
    if size > context.endotrivial_tensor_limit:
        raise BudgetExceeded(
            f"M (x) M* has dimension {size}, above the endotrivial tensor limit",
            count=size,
            budget=context.endotrivial_tensor_limit,
        )
    core = strip_projectives(context, tensor(M, dual(M))).core
    result = core.dim == 1 and not np.any(as_ints(core.actions))
    log.debug(f"{M}: M (x) M* has a core of dimension {core.dim}; endotrivial: {result}")
    return result
