"""
Report records. Each one is a pydantic model; `model_json_schema()` is the published schema of the record and
`rlakit schema NAME` prints it.
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class Check(BaseModel):
    name: str
    passed: bool
    witness: Optional[List[int]] = None
    detail: Optional[str] = None


class VerificationReport(BaseModel):
    "Axiom checks of an algebra, or representation checks of a module"

    subject: str
    passed: bool
    checks: List[Check]


class PlaneValue(BaseModel):
    plane: str
    basis: List[list]
    value: int


class PlaneCheck(BaseModel):
    plane: str
    passed: bool
    lhs: int
    rhs: int
    detail: Optional[str] = None


class PlaneCheckReport(BaseModel):
    name: str
    passed: bool
    entries: List[PlaneCheck]


class RankWitness(BaseModel):
    point: list
    rank: int


class ConstantRankReport(BaseModel):
    is_constant: bool
    rank: Optional[int] = None
    points_checked: int
    witnesses: List[RankWitness] = []


class SyzygyReport(BaseModel):
    entries: List[PlaneValue]
    constant: bool
    sign_convention: str = "s_M(e) is the integer n with M|e = Omega^n(K) + (free); n ranges over all integers"
    contradiction_candidate: bool = False

    def values_by_label(self) -> Dict[str, int]:
        return {e.plane: e.value for e in self.entries}


class DegreeReport(BaseModel):
    entries: List[PlaneValue]
    kernel_dims: List[PlaneValue]
    stable_under_extension: Optional[bool] = None

    def values_by_label(self) -> Dict[str, int]:
        return {e.plane: e.value for e in self.entries}


class ClassificationResult(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    status: Literal["classified", "no_match", "not_supersolvable"]
    n: Optional[int] = None
    lambda_: Optional[list] = Field(default=None, alias="lambda")
    proj_mult: int = 0
    projective_dims: List[int] = []
    core_dim: int = 0
    reason: Optional[str] = None


class GraphReport(BaseModel):
    nodes: int
    edges: int
    components: int
    component_sizes: List[int]
    predicate: Literal["pencil", "meet"]
    certifying: bool
    status: Literal["connected", "disconnected", "empty", "inconclusive"]
    field: str
    stable_under_extension: Optional[bool] = None
    edges_verified_over_extension: Optional[bool] = None


class PathReport(BaseModel):
    "The planes through a p-nilpotent z0 and their pencil graph"

    z0: list
    central: bool
    planes: List[str]
    edges: int
    connected: bool
    nullcone_points: int
    algebra_is_cyclic: bool


class IntersectionCheck(BaseModel):
    first: str
    second: str
    intersection_dim: int
    intersection_cyclic: bool
    first_mod_center_dim: int
    passed: bool


class MaximalReport(BaseModel):
    subalgebras: List[str]
    e2_counts: List[int]
    center_codim: int
    center_codim_at_most_3: bool
    checks: List[IntersectionCheck]


class AlgebraInfo(BaseModel):
    name: str
    field: str
    dimension: int
    basis: List[str]
    center: List[list]
    derived_series_dims: List[int]
    lower_central_series_dims: List[int]
    nilpotent: bool
    unipotent: bool
    supersolvable: bool
    torus: bool


class ModuleSummary(BaseModel):
    dimension: int
    subspace_dim: Optional[int] = None
    summands: Optional[List[int]] = None
    projective_dims: Optional[List[int]] = None
    isomorphic: Optional[Literal["true", "false", "unknown"]] = None


REPORTS = {
    "verification": VerificationReport,
    "constant-rank": ConstantRankReport,
    "syzygy": SyzygyReport,
    "degree": DegreeReport,
    "plane-check": PlaneCheckReport,
    "classification": ClassificationResult,
    "graph": GraphReport,
    "path": PathReport,
    "maximal": MaximalReport,
    "algebra-info": AlgebraInfo,
    "module": ModuleSummary,
}
