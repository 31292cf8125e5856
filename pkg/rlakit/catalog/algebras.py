"""
Builders for the catalogue algebras. Each builder takes the field and the entry's parameters and returns an
algebra; `nullcone_equation` returns, for the entries that have one, a predicate on coordinate arrays that is True
exactly on the nullcone.
"""

from typing import Callable, Optional

import galois
import numpy as np

from rlakit.lie.algebra import RestrictedLieAlgebra, make_algebra
from rlakit.utils import BadParameters

from .random_unipotent import random_unipotent


def structure(F, entry: dict, **params) -> RestrictedLieAlgebra:
    "An algebra given by the structure constants stored in the entry"
    brackets = {tuple(int(i) for i in key.split(",")): v for key, v in entry["bracket"].items()}
    pmaps = {int(key): v for key, v in entry.get("pmap", {}).items()}
    return make_algebra(F, entry["basis"], brackets, pmaps)


def heisenberg(F, entry: dict, variant: str = "zero", **params) -> RestrictedLieAlgebra:
    if variant not in ("zero", "toral"):
        raise BadParameters(f"unknown heisenberg variant: {variant}", variant=variant)
    pmaps = {2: [0, 0, 1]} if variant == "toral" else {}
    return make_algebra(F, ["x", "y", "z"], {(0, 1): [0, 0, 1]}, pmaps)


def _check_rank(r: int):
    if r < 1:
        raise BadParameters(f"the dimension must be at least 1, got {r}", r=r)


def elementary_abelian(F, entry: dict, r: int = 2, **params) -> RestrictedLieAlgebra:
    _check_rank(r)
    return make_algebra(F, [f"a{i + 1}" for i in range(r)], {}, {})


def torus(F, entry: dict, r: int = 1, **params) -> RestrictedLieAlgebra:
    _check_rank(r)
    return make_algebra(F, [f"t{i + 1}" for i in range(r)], {}, {i: np.eye(r, dtype=np.int64)[i] for i in range(r)})


def cubic_cone(F, entry: dict, omega: int = 1, **params) -> RestrictedLieAlgebra:
    "[x, y] = z, [x, z] = c, [y, z] = omega c, z^[3] = c"
    brackets = {(0, 1): [0, 0, 1, 0], (0, 2): [0, 0, 0, 1], (1, 2): [0, 0, 0, omega]}
    return make_algebra(F, ["x", "y", "z", "c"], brackets, {2: [0, 0, 0, 1]})


def cubic_cone_chain(F, entry: dict, omega: int = 1, length: int = 2, **params) -> RestrictedLieAlgebra:
    "cubic_cone with z^[3] = c1, c_i^[3] = c_{i+1} and c_length^[3] = 0"
    if length < 1:
        raise BadParameters(f"the chain length must be at least 1, got {length}", length=length)
    n = 3 + length
    e = np.eye(n, dtype=np.int64)
    names = ["x", "y", "z"] + [f"c{i + 1}" for i in range(length)]
    brackets = {(0, 1): e[2], (0, 2): e[3], (1, 2): omega * e[3]}
    pmaps = {i: e[i + 1] for i in range(2, n - 1)}
    return make_algebra(F, names, brackets, pmaps)


def cubic_cone_split(F, entry: dict, **params) -> RestrictedLieAlgebra:
    "[x, y] = z, [x, z] = c1, [y, z] = c2, z^[3] = c1, c1^[3] = c2"
    e = np.eye(5, dtype=np.int64)
    brackets = {(0, 1): e[2], (0, 2): e[3], (1, 2): e[4]}
    return make_algebra(F, ["x", "y", "z", "c1", "c2"], brackets, {2: e[3], 3: e[4]})


builders = {  # builder name -> function(F, entry, **params)
    "structure": structure,
    "heisenberg": heisenberg,
    "elementary_abelian": elementary_abelian,
    "torus": torus,
    "cubic_cone": cubic_cone,
    "cubic_cone_chain": cubic_cone_chain,
    "cubic_cone_split": cubic_cone_split,
    "random_unipotent": lambda F, entry, n=4, seed=0, **params: random_unipotent(F, n, seed),
}


def _cone_form(X: galois.FieldArray, omega) -> galois.FieldArray:
    a, b, g = X[..., 0], X[..., 1], X[..., 2]
    return a**2 * b - omega * a * b**2 + g**3


def nullcone_equation(builder: str, F, **params) -> Optional[Callable[[galois.FieldArray], np.ndarray]]:
    """
    The predicted nullcone of the cubic-cone family, keyed by builder name, as a predicate on coordinate arrays:
    a^2 b - omega a b^2 + g^3 = 0 for cubic_cone (c free); the same with c_1..c_{length-1} = 0 for
    cubic_cone_chain; a^2 b + g^3 = 0 and c1^3 = a b^2 for cubic_cone_split.
    """
    omega = F(int(params.get("omega", 1)) % int(F.characteristic))
    if builder == "cubic_cone":
        return lambda X: np.asarray(_cone_form(X, omega) == 0)
    if builder == "cubic_cone_chain":
        length = int(params.get("length", 2))

        def chain(X):
            rest = np.asarray(X[..., 3 : 3 + length - 1] == 0).all(axis=-1)
            return np.asarray(_cone_form(X, omega) == 0) & rest

        return chain
    if builder == "cubic_cone_split":

        def split(X):
            a, b, g, c1 = X[..., 0], X[..., 1], X[..., 2], X[..., 3]
            return np.asarray(a**2 * b + g**3 == 0) & np.asarray(c1**3 == a * b**2)

        return split
    return None
