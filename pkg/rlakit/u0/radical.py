"""
Radical, socle and top of a module.

Over a unipotent algebra U_0(L) is local and its radical is the augmentation ideal, generated by the basis of L,
so rad M = sum_i im rho_i and soc M = n_i ker rho_i. Otherwise the radical of the matrix algebra spanned by the
action is computed.
"""

from typing import List

import galois

from rlakit.linalg.matrix import Subspace, full_subspace, kernel_basis, row_space, zero_subspace
from rlakit.linalg.radical import algebra_radical
from rlakit.utils import check_budget, log

from .enveloping import is_local
from .module import RepModule, quotient_module, submodule


def acting_radical(context, M: RepModule) -> galois.FieldArray:
    "J(rho(U_0(L))) as a stack of d x d matrices; cached on the module"
    cached = M.cache.get("acting_radical")
    if cached is None:
        check_budget(M.dim, context.decompose_budget, "radical of the acting algebra")
        J = algebra_radical(list(M.actions), F=M.field, d=M.dim)
        cached = J.basis.reshape(-1, M.dim, M.dim)
        M.cache["acting_radical"] = cached
        log.debug(f"radical of the algebra acting on {M}: dimension {cached.shape[0]}")
    return cached


def _radical_generators(context, M: RepModule) -> galois.FieldArray:
    if is_local(M.algebra):
        return M.actions
    return acting_radical(context, M)


def radical(context, M: RepModule) -> Subspace:
    "J M"
    d = M.dim
    if d == 0:
        return zero_subspace(M.field, 0)
    gens = _radical_generators(context, M)
    # the columns of every generator span its image
    return row_space(gens.transpose(0, 2, 1).reshape(-1, d), d)


def socle(context, M: RepModule) -> Subspace:
    "{m : J m = 0}"
    d = M.dim
    gens = _radical_generators(context, M)
    if d == 0 or gens.shape[0] == 0:
        return full_subspace(M.field, d)
    return kernel_basis(gens.reshape(-1, d))


def top(context, M: RepModule) -> RepModule:
    "M / rad M"
    return quotient_module(M, radical(context, M), f"top({M.name})")


def top_generators(context, M: RepModule) -> galois.FieldArray:
    """
    Rows (r, d): standard vectors whose classes form a basis of M / rad M. They generate M, and r is the least
    number of generators.
    """
    R = radical(context, M)
    F = M.field
    return F.Identity(M.dim)[list(R.complement)]


def radical_layers(context, M: RepModule) -> List[int]:
    "dim rad^i M / rad^{i+1} M for i = 0, 1, ..."
    layers = []
    current = M
    while current.dim:
        R = radical(context, current)
        layers.append(current.dim - R.dim)
        current = submodule(current, R)
    return layers


def composition_factors(context, M: RepModule) -> List[int]:
    "Dimensions of the composition factors, sorted"
    if is_local(M.algebra):
        return [1] * M.dim
    from .decompose import decompose

    dims = []
    current = M
    while current.dim:
        R = radical(context, current)
        dims.extend(S.dim for S in decompose(context, top(context, current)))
        current = submodule(current, R)
    return sorted(dims)


def is_semisimple(context, M: RepModule) -> bool:
    return radical(context, M).dim == 0

