"""
Finite fields F_{p^k} as `galois` FieldArray classes.

Elements are residue polynomials modulo a fixed monic irreducible modulus. The integer representation used by
galois is the polynomial evaluated at `p`, so the coefficient list (constant term first) of an element is the list
of its base-`p` digits; that list is the serialized form of an element.
"""

from functools import lru_cache
from typing import Callable, Optional, Sequence, Type

import galois
import numpy as np

from rlakit.utils import BadParameters, CharTwoUnsupported, NotIrreducible, NotPrime, log

Field = Type[galois.FieldArray]


def field_make(p: int, k: int = 1, modulus: Optional[Sequence[int]] = None) -> Field:
    """
    * p: the characteristic, an odd prime
    * k: the extension degree, at least 1
    * modulus: optional coefficients of a monic degree-k polynomial over F_p, constant term first.
        When omitted (and k > 1) the lexicographically least monic irreducible polynomial is used.
    """
    p, k = int(p), int(k)
    if p < 2 or not galois.is_prime(p):
        raise NotPrime(f"the characteristic must be prime, got {p}", p=p)
    if p == 2:
        raise CharTwoUnsupported("characteristic 2 is not supported", p=p)
    if k < 1:
        raise BadParameters(f"the extension degree must be at least 1, got {k}", k=k)

    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise BadParameters(f"the modulus must be monic of degree {k}, got {list(modulus)}", modulus=list(modulus))
        poly = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
        if not poly.is_irreducible():
            raise NotIrreducible(f"the modulus {poly} is reducible over F_{p}", modulus=list(modulus))
    elif k > 1:
        modulus = _least_irreducible(p, k)

    return _make_field(p, k, modulus if k > 1 else None)


@lru_cache(maxsize=None)
def _least_irreducible(p: int, k: int) -> tuple:
    poly = galois.irreducible_poly(p, k, method="min")
    return tuple(int(c) for c in reversed(poly.coeffs))


@lru_cache(maxsize=None)
def _make_field(p: int, k: int, modulus: Optional[tuple]) -> Field:
    if k == 1:
        return galois.GF(p)

    poly = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
    log.debug(f"building GF({p}^{k}) with modulus {poly}")
    return galois.GF(p**k, irreducible_poly=poly)


def field_label(F: Field) -> str:
    p, k = int(F.characteristic), int(F.degree)
    return f"GF({p})" if k == 1 else f"GF({p}^{k})"


def modulus_coefficients(F: Field) -> list:
    "Coefficients of the modulus, constant term first. Prime fields report the polynomial `t`."
    if F.degree == 1:
        return [0, 1]
    return [int(c) for c in reversed(F.irreducible_poly.coeffs)]


def coerce(F: Field, values) -> galois.FieldArray:
    """
    Converts integers (possibly negative, e.g. structure constants like -2) to field elements.
    Plain integers always denote elements of the prime subfield, reduced mod p.
    """
    arr = np.asarray(values, dtype=np.int64)
    return F(np.mod(arr, int(F.characteristic)))


def element_to_json(F: Field, a) -> object:
    "An int for prime fields, else the list of polynomial coefficients (constant term first)."
    p, k = int(F.characteristic), int(F.degree)
    value = int(a)
    if k == 1:
        return value
    digits = []
    for _ in range(k):
        digits.append(value % p)
        value //= p
    return digits


def element_from_json(F: Field, value) -> int:
    "Returns the galois integer representation of a serialized element"
    p, k = int(F.characteristic), int(F.degree)
    if isinstance(value, (list, tuple)):
        if len(value) > k:
            raise BadParameters(f"element {value} has more than {k} coefficients")
        return sum((int(c) % p) * p**j for j, c in enumerate(value))
    return int(value) % p


def vector_to_json(F: Field, v) -> list:
    return [element_to_json(F, a) for a in np.asarray(v).reshape(-1)]


def vector_from_json(F: Field, values) -> galois.FieldArray:
    return F(np.array([element_from_json(F, a) for a in values], dtype=np.int64).reshape(len(values)))


def field_extension(F: Field, degree: int = 2) -> Field:
    "The field F_{q^degree}, with the lexicographically least modulus of that degree"
    return field_make(int(F.characteristic), int(F.degree) * degree)


@lru_cache(maxsize=None)
def field_embedding(F: Field, E: Field) -> Callable[[galois.FieldArray], galois.FieldArray]:
    """
    Returns a function mapping arrays over `F` to arrays over `E`, for `F` a subfield of `E`.
    The image of the generator of `F` is the smallest root of the modulus of `F` in `E`.
    """
    p, k, K = int(F.characteristic), int(F.degree), int(E.degree)
    if int(E.characteristic) != p or K % k != 0:
        raise BadParameters(f"{field_label(F)} is not a subfield of {field_label(E)}")

    if k == 1:
        return lambda x: E(np.asarray(x.view(np.ndarray) if isinstance(x, galois.FieldArray) else x, dtype=np.int64))

    poly = galois.Poly(list(F.irreducible_poly.coeffs.view(np.ndarray)), field=E)
    elements = E.elements
    roots = elements[poly(elements) == 0]
    powers = roots[0] ** np.arange(k)

    def embed(x):
        ints = np.asarray(x.view(np.ndarray) if isinstance(x, galois.FieldArray) else x, dtype=np.int64)
        out = E.Zeros(ints.shape)
        rest = ints.copy()
        for j in range(k):
            digit = E(rest % p)
            out = out + digit * powers[j]
            rest //= p
        return out

    return embed
