"""
Algebra and module files.

Field elements are written as ints over prime fields and as coefficient lists (constant term first) over
extensions. Only nonzero structure constants are written; `"i,j"` keys have i < j. Serialization is canonical, so
an emitted file re-parses to an equal structure and is byte-stable.
"""

import os
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from rlakit.linalg.field import field_make, modulus_coefficients, vector_from_json, vector_to_json
from rlakit.linalg.matrix import as_ints
from rlakit.lie.algebra import RestrictedLieAlgebra
from rlakit.lie.axioms import require_axioms
from rlakit.u0.module import RepModule, require_module
from rlakit.utils import BadParameters, DimensionMismatch, InputError, load_json, save_json


class FieldSpec(BaseModel):
    k: int = 1
    modulus: Optional[List[int]] = None


class AlgebraFile(BaseModel):
    p: int
    field: FieldSpec = FieldSpec()
    name: str = ""
    basis: List[str]
    bracket: Dict[str, list] = {}
    pmap: Dict[str, list] = {}


class ModuleFile(BaseModel):
    algebra: Union[AlgebraFile, str]
    name: str = ""
    dimension: int
    actions: List[List[list]] = Field(description="one row-major matrix per basis element of the algebra")


def _parse(model, data):
    try:
        return model.model_validate(data)
    except ValidationError as e:
        errors = [f"{'.'.join(map(str, x['loc']))}: {x['msg']}" for x in e.errors()]
        raise InputError(f"invalid {model.__name__}: {e.error_count()} errors", errors=errors)


def _index(key: str, n: int, arity: int) -> tuple:
    try:
        idx = tuple(int(x) for x in key.split(","))
    except ValueError:
        raise BadParameters(f"bad index key {key!r}")
    if len(idx) != arity or any(not 0 <= i < n for i in idx):
        raise BadParameters(f"index key {key!r} out of range for dimension {n}")
    return idx


def algebra_to_json(L: RestrictedLieAlgebra, name: str = "") -> dict:
    F, n = L.field, L.n
    C, P = as_ints(L.bracket_table), as_ints(L.pmap_table)
    data = AlgebraFile(
        p=L.p,
        field=FieldSpec(k=int(F.degree), modulus=modulus_coefficients(F) if F.degree > 1 else None),
        name=name,
        basis=list(L.names),
        bracket={f"{i},{j}": vector_to_json(F, C[i, j]) for i in range(n) for j in range(i + 1, n) if C[i, j].any()},
        pmap={f"{i}": vector_to_json(F, P[i]) for i in range(n) if P[i].any()},
    )
    return data.model_dump(exclude_none=True)


def algebra_from_json(data, verify: bool = True) -> RestrictedLieAlgebra:
    parsed = data if isinstance(data, AlgebraFile) else _parse(AlgebraFile, data)
    F = field_make(parsed.p, parsed.field.k, parsed.field.modulus)
    n = len(parsed.basis)
    if len(set(parsed.basis)) != n:
        raise BadParameters(f"duplicate basis names: {parsed.basis}")

    C = F.Zeros((n, n, n))
    for key, coeffs in parsed.bracket.items():
        i, j = _index(key, n, 2)
        if i == j:
            raise BadParameters(f"bracket key {key!r}: [e_i, e_i] is always 0")
        v = _vector(F, coeffs, n, key)
        C[i, j], C[j, i] = v, -v
    P = F.Zeros((n, n))
    for key, coeffs in parsed.pmap.items():
        (i,) = _index(key, n, 1)
        P[i] = _vector(F, coeffs, n, key)

    L = RestrictedLieAlgebra(F, tuple(parsed.basis), C, P)
    return require_axioms(L, parsed.name or None) if verify else L


def _vector(F, coeffs, n: int, key: str):
    if len(coeffs) != n:
        raise DimensionMismatch(f"entry {key!r} has {len(coeffs)} coefficients, expected {n}")
    return vector_from_json(F, coeffs)


def module_to_json(M: RepModule, algebra_name: str = "") -> dict:
    F = M.field
    actions = [[vector_to_json(F, row) for row in a] for a in M.actions]
    data = ModuleFile(
        algebra=AlgebraFile(**algebra_to_json(M.algebra, algebra_name)),
        name=M.name,
        dimension=M.dim,
        actions=actions,
    )
    return data.model_dump(exclude_none=True)


def module_from_json(data, verify: bool = True, base_dir: str = ".") -> RepModule:
    """
    * base_dir: directory for resolving an algebra given as a file path
    """
    parsed = _parse(ModuleFile, data)
    if isinstance(parsed.algebra, str):
        L = load_algebra(os.path.join(base_dir, parsed.algebra), verify)
    else:
        L = algebra_from_json(parsed.algebra, verify)
    F, d = L.field, parsed.dimension
    if len(parsed.actions) != L.n:
        raise DimensionMismatch(f"{len(parsed.actions)} action matrices for an algebra of dimension {L.n}")

    actions = F.Zeros((L.n, d, d))
    for i, rows in enumerate(parsed.actions):
        if len(rows) != d:
            raise DimensionMismatch(f"action {i} has {len(rows)} rows, expected {d}")
        for r, row in enumerate(rows):
            actions[i, r] = _vector(F, row, d, f"{i}:{r}")
    M = RepModule(L, actions, parsed.name)
    return require_module(M, parsed.name or None) if verify else M


def load_algebra(path: str, verify: bool = True) -> RestrictedLieAlgebra:
    data = load_json(path)
    if "actions" in data:
        raise InputError(f"{path} is a module file, expected an algebra file")
    return algebra_from_json(data, verify)


def load_module(path: str, verify: bool = True) -> RepModule:
    base_dir = os.path.dirname(path) if path != "-" else "."
    return module_from_json(load_json(path), verify, base_dir)


def save_algebra(L: RestrictedLieAlgebra, path: str, name: str = ""):
    save_json(algebra_to_json(L, name), path)


def save_module(M: RepModule, path: str, algebra_name: str = ""):
    save_json(module_to_json(M, algebra_name), path)

