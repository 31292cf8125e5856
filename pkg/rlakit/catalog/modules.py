"""
Builders for the catalogue modules.
"""

from rlakit.linalg.matrix import row_space
from rlakit.lie.algebra import RestrictedLieAlgebra
from rlakit.lie.structure import subalgebra_structure
from rlakit.u0.heller import heller
from rlakit.u0.module import RepModule, character_module, induce, regular_module, submodule, trivial_module
from rlakit.u0.radical import radical


def baby_verma(context, L: RestrictedLieAlgebra, S, lam=None) -> RepModule:
    """
    U_0(L) (x)_{U_0(b)} K_lambda for the p-subalgebra b = S (a Subspace) and a character lambda of b, given by its
    values on the echelon basis of S. lambda defaults to 0.
    """
    B = subalgebra_structure(L, S)
    K = character_module(B, lam if lam is not None else B.field.Zeros(B.n))
    return induce(context, L, S, K)


def _borel_s(L: RestrictedLieAlgebra):
    "b_s = K(h + c0) (+) Ke inside sl2_s (basis e, h, f, c0)"
    return row_space(L.field([[0, 1, 0, 1], [1, 0, 0, 0]]))


def baby_verma_Z0(context, L: RestrictedLieAlgebra, **params) -> RepModule:
    Z = baby_verma(context, L, _borel_s(L))
    Z.name = "Z(0)"
    return Z


def rad_Z0(context, L: RestrictedLieAlgebra, **params) -> RepModule:
    Z = baby_verma_Z0(context, L)
    return submodule(Z, radical(context, Z), "Rad(Z(0))")


def trivial(context, L: RestrictedLieAlgebra, **params) -> RepModule:
    return trivial_module(L)


def regular(context, L: RestrictedLieAlgebra, **params) -> RepModule:
    return regular_module(context, L)


def heller_trivial(context, L: RestrictedLieAlgebra, n: int = 1, **params) -> RepModule:
    return heller(context, trivial_module(L), int(n))


builders = {  # module name -> function(context, L, **params)
    "baby_verma_Z0": baby_verma_Z0,
    "rad_Z0": rad_Z0,
    "trivial": trivial,
    "regular": regular,
    "heller_trivial": heller_trivial,
}
