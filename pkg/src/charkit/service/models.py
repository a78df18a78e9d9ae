"""Request and response models of the computation service."""
from __future__ import annotations

from pydantic import BaseModel, Field


class RootsRequest(BaseModel):
    type: str = Field(examples=["E7", "A2", "B3"])


class RootsResponse(BaseModel):
    type: str
    rank: int
    num_positive: int
    longest_length: int
    group_order: int
    minus_w0_fixes_simples: bool
    simple_roots: list[list[int]]
    ok: bool


class CoxeterConjRequest(BaseModel):
    type: str = "E7"
    source: list[int]   # 1-based node ordering
    target: list[int]


class CoxeterConjResponse(BaseModel):
    type: str
    source: list[int]
    target: list[int]
    word: list[int]     # 1-based generator indices
    verified: bool
    ok: bool


class CharTableRequest(BaseModel):
    group: str = Field(examples=["S4", "Z4", "perm: (1,2)(3,4); (1,3)"])


class ClassInfo(BaseModel):
    size: int
    element_order: int


class CharTableResponse(BaseModel):
    group: str
    order: int
    classes: list[ClassInfo]
    rows: list[list[str]]
    orthogonality_ok: bool
    ok: bool


class FourierRequest(BaseModel):
    group: str = Field(examples=["Z2", "S3"])


class FourierResponse(BaseModel):
    group: str
    mpairs: list[list[int]]
    matrix: list[list[str]]
    hermitian: bool
    involution: bool
    ok: bool


class SandboxRequest(BaseModel):
    n: int
    q: int
    check: str = Field("heckeuch", pattern="^(heckeuch|cells|cellpartition|cellproducts|hecke)$")


class SandboxResponse(BaseModel):
    check: str
    n: int
    q: int
    cases: int
    failures: list[dict]
    ok: bool


class SignRequest(BaseModel):
    families: str | None = None   # path override, resolved server-side
    traces: str | None = None
    positivity: bool = True


class SignResponse(BaseModel):
    xi: int
    admissible_delta: list[int]
    audit: list[dict]
    ok: bool


class TableRequest(BaseModel):
    q: int | None = None          # prime power; omit for symbolic entries
    families: str | None = None
    traces: str | None = None


class TableResponse(BaseModel):
    xi: int
    rows: list[str]
    cols: list[str]
    entries: dict[str, dict[str, str]]
    x0_slot: dict[str, str]   # values of the non-principal slot of the 56-family
    q: int | None
    ok: bool
