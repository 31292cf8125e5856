import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Union

from rlakit.linalg.field import field_make
from rlakit.lie.algebra import RestrictedLieAlgebra
from rlakit.lie.axioms import require_axioms
from rlakit.u0.module import RepModule, require_module
from rlakit.utils import BadParameters, UnknownEntry, log

from . import algebras, modules

db = None


@dataclass
class CatalogEntry:
    """
    * name: the catalogue name
    * params: the parameters the entry was built with, defaults filled in
    * value: the validated algebra or module
    * nullcone_equation: for the cubic-cone family, a predicate on coordinate arrays matching V(L)
    """

    name: str
    params: dict
    value: Union[RestrictedLieAlgebra, RepModule]
    nullcone_equation: Optional[Callable] = field(default=None, repr=False)

    @property
    def algebra(self) -> RestrictedLieAlgebra:
        return self.value if isinstance(self.value, RestrictedLieAlgebra) else self.value.algebra


def get_catalog_db():
    global db

    if db is not None:
        return db

    db_path = Path(__file__).parent / "catalog_db"
    db = {}
    with open(db_path / "algebras.json") as f:
        db["algebras"] = json.load(f)
    with open(db_path / "modules.json") as f:
        db["modules"] = json.load(f)
    return db


def list_entries() -> dict:
    "{name: {kind, description, params}} for every entry"
    db = get_catalog_db()
    out = {}
    for kind in ("algebras", "modules"):
        for name, info in db[kind].items():
            out[name] = {"kind": kind[:-1], "description": info["description"], "params": info["params"]}
    return out


def _merge(name: str, defaults: dict, params: dict, extra_ok: bool = False) -> dict:
    unknown = set(params) - set(defaults)
    if unknown and not extra_ok:
        raise BadParameters(f"unknown parameters for {name}: {sorted(unknown)}", allowed=sorted(defaults))
    merged = dict(defaults)
    merged.update(params)
    return merged


def build_algebra(name: str, **params) -> CatalogEntry:
    info = get_catalog_db()["algebras"].get(name)
    if info is None:
        raise UnknownEntry(f"no catalogue algebra named {name}", name=name)
    params = _merge(name, info["params"], params)
    p, k = int(params["p"]), int(params["k"])
    if "primes" in info and p not in info["primes"]:
        raise BadParameters(f"{name} is only defined for p in {info['primes']}, got {p}", p=p)

    F = field_make(p, k)
    extra = {key: v for key, v in params.items() if key not in ("p", "k")}
    L = algebras.builders[info["builder"]](F, info, **extra)
    require_axioms(L, name)
    log.debug(f"built catalogue algebra {name} with {params}")
    return CatalogEntry(name, params, L, algebras.nullcone_equation(info["builder"], F, **extra))


def build_module(context, name: str, **params) -> CatalogEntry:
    info = get_catalog_db()["modules"].get(name)
    if info is None:
        raise UnknownEntry(f"no catalogue module named {name}", name=name)
    params = _merge(name, info["params"], params, extra_ok=True)

    algebra_name = info["algebra"] or params.get("algebra")
    algebra_params = {key: params[key] for key in ("p", "k")}
    own = set(info["params"]) | {"algebra"}
    algebra_params.update({key: v for key, v in params.items() if key not in own})
    L = build_algebra(algebra_name, **algebra_params).algebra

    module_params = {key: v for key, v in params.items() if key in own and key not in ("p", "k", "algebra")}
    M = modules.builders[name](context, L, **module_params)
    require_module(M, name)
    log.debug(f"built catalogue module {name} ({M.dim}-dimensional) with {params}")
    return CatalogEntry(name, params, M)


def build(context, name: str, **params) -> CatalogEntry:
    "Any catalogue entry by name; unknown names raise `UnknownEntry`"
    db = get_catalog_db()
    if name in db["algebras"]:
        return build_algebra(name, **params)
    if name in db["modules"]:
        return build_module(context, name, **params)
    raise UnknownEntry(f"no catalogue entry named {name}", name=name, known=sorted(list_entries()))
