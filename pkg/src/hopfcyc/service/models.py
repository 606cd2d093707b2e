"""Pydantic request/response models for the HTTP surface.

These mirror the JSON schemas of the wire formats one to one; scalar entries
are strings like ``"2/3"`` (plain integers are accepted on input).
"""

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

Scalar = Union[str, int]
Matrix = list[list[Scalar]]
Vector = list[Scalar]


class HopfModel(BaseModel):
    dim: int
    basis: Optional[list[str]] = None
    mult: Matrix
    unit: Vector
    comult: Matrix
    counit: Vector
    antipode: Matrix
    antipode_inv: Optional[Matrix] = None


class CoefficientModel(BaseModel):
    action: Matrix
    coaction: Matrix


class ObjectModel(BaseModel):
    """A module algebra (mult/unit) or module coalgebra (comult/counit)."""

    action: Matrix
    mult: Optional[Matrix] = None
    unit: Optional[Vector] = None
    comult: Optional[Matrix] = None
    counit: Optional[Vector] = None


class SpaceModel(BaseModel):
    factors: list[list[Union[str, int]]]
    inclusion: Matrix


class TowerModel(BaseModel):
    variance: Literal["cyclic", "cocyclic"]
    degree_cap: int
    dims: list[int]
    spaces: list[SpaceModel]
    faces: list[list[Matrix]]
    degens: list[list[Matrix]]
    cyclic_ops: list[Matrix]
    provenance: dict = Field(default_factory=dict)


class VerifyHopfRequest(BaseModel):
    hopf: HopfModel


class MismatchModel(BaseModel):
    row: int
    col: int
    lhs: Scalar
    rhs: Scalar


class AxiomCheckModel(BaseModel):
    name: str
    passed: bool
    first_mismatch: Optional[MismatchModel] = None


class AxiomReportModel(BaseModel):
    passed: bool
    checks: list[AxiomCheckModel]


class CheckCoeffRequest(BaseModel):
    hopf: HopfModel
    coeff: CoefficientModel
    i: int = 0
    require_stability: bool = False


class CoeffReportModel(BaseModel):
    i: int
    yd_route1: bool
    yd_route2: bool
    yd: bool
    yd_first_mismatch: Optional[MismatchModel] = None
    stability_even: bool
    stability_odd: bool
    stable: bool
    requested_ok: bool


class BuildRequest(BaseModel):
    hopf: HopfModel
    coeff: CoefficientModel
    object: ObjectModel
    theory: Literal["cov-alg", "cov-coalg", "contra-alg", "contra-coalg"]
    degree: int = Field(default=2, ge=1, le=8)
    allow_paracyclic: bool = False
    builder: Literal["direct", "generic"] = "direct"


class BuildResponse(BaseModel):
    object: TowerModel


class TowerRequest(BaseModel):
    object: TowerModel


class ViolationModel(BaseModel):
    relation: str
    degree: int
    indices: list[int]


class RelationReportModel(BaseModel):
    passed: bool
    checked: int
    checked_by_relation: dict[str, int] = Field(default_factory=dict)
    violations: list[ViolationModel]


class ComplexReportModel(BaseModel):
    hochschild: list[int]
    cyclic: list[int]
    max_valid_degree: int


class ErrorModel(BaseModel):
    code: str
    detail: str
