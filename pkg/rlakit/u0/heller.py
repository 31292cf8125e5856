"""
Heller shifts. Omega(M) is the kernel of a free cover of the projective-free core of M, with its projective
summands removed; this does not depend on the cover. Omega^{-1}(M) = Omega(M*)*, since U_0(L) is a Frobenius
algebra.
"""

from rlakit.utils import log

from .enveloping import u0_build
from .hom import kernel_module, presentation
from .module import RepModule, dual
from .projective import strip_projectives


def syzygy(context, M: RepModule) -> RepModule:
    "Omega(M), projective-free"
    core = strip_projectives(context, M).core
    if core.dim == 0:
        return core
    U = u0_build(context, M.algebra)
    pres = presentation(context, core)
    K = kernel_module(U, pres.kernel, pres.rank, f"Omega({M.name})")
    return strip_projectives(context, K).core


def cosyzygy(context, M: RepModule) -> RepModule:
    "Omega^{-1}(M), projective-free"
    out = dual(syzygy(context, dual(M)))
    out.name = f"Omega^-1({M.name})"
    return out


def heller(context, M: RepModule, n: int) -> RepModule:
    "Omega^n(M) for any integer n; Omega^0(M) is the projective-free core of M"
    current = strip_projectives(context, M).core
    step = syzygy if n > 0 else cosyzygy
    for i in range(abs(n)):
        current = step(context, current)
        log.debug(f"Omega^{(i + 1) if n > 0 else -(i + 1)}({M.name}): dimension {current.dim}")
    if n:
        current.name = f"Omega^{n}({M.name})"
    return current
