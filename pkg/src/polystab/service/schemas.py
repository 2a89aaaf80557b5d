"""Request and response models for the HTTP service.

FastAPI validates incoming JSON against these, and every CLI invocation
goes through the same models, so wire and terminal clients see one
schema.  All responses carry a top-level "schema": 1 version field.
Exact scalars travel as "numerator/denominator" strings; float scalars
as JSON numbers (repr round-trip preserves them bit-identically).
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

CoeffIn = Union[int, float, str]
ScalarOut = Union[str, float]
WitnessOut = tuple[str, ScalarOut]

SCHEMA_VERSION = 1


class _Versioned(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(
        default=SCHEMA_VERSION, alias="schema", serialization_alias="schema"
    )


class PolynomialIn(BaseModel):
    """A polynomial as submitted: trailing coefficients, highest power first.

    With `leading` set, all coefficients are divided by it (the monic
    normalization); `degree` is optional and cross-checked when present.
    `exact` selects the rational domain (strings and numbers read
    decimally) over IEEE doubles.
    """

    coeffs: list[CoeffIn]
    degree: Optional[int] = None
    leading: Optional[CoeffIn] = None
    exact: bool = True


class PolynomialEcho(BaseModel):
    degree: int
    domain: Literal["exact", "float"]
    coeffs: list[ScalarOut]


class CertificateOut(BaseModel):
    kind: str
    witnesses: list[WitnessOut]


class AnalyzeRequest(BaseModel):
    polynomial: PolynomialIn
    include_roots: bool = False
    margin: float = Field(default=1e-8, gt=0)


class RootOut(BaseModel):
    re: float
    im: float


class RootReportOut(BaseModel):
    roots: list[RootOut]
    max_real_part: float
    classification: str
    residual: float
    margin: float
    iterations: int


class AnalyzeResponse(_Versioned):
    input: PolynomialEcho
    minors: list[ScalarOut]
    verdict: str
    certificate: str
    witnesses: list[WitnessOut]
    roots: Optional[RootReportOut] = None
    timing_ms: float


class MinorsRequest(BaseModel):
    polynomial: PolynomialIn


class Delta4Routes(BaseModel):
    determinant: ScalarOut
    expanded: ScalarOut
    factored: ScalarOut
    agree: bool


class MinorsResponse(_Versioned):
    input: PolynomialEcho
    minors: list[ScalarOut]
    delta4: Optional[Delta4Routes] = None
    note: Optional[str] = None


class RootsRequest(BaseModel):
    polynomial: PolynomialIn
    margin: float = Field(default=1e-8, gt=0)


class RootsResponse(_Versioned):
    input: PolynomialEcho
    report: RootReportOut


class FuzzRequest(BaseModel):
    count: int = Field(default=10000, ge=1)
    degree_lo: int = Field(default=5, ge=1)
    degree_hi: int = Field(default=9, ge=1)
    seed: int = Field(default=42, ge=0, lt=2**64)
    margin: float = Field(default=1e-8, gt=0)


class FuzzCheckOut(BaseModel):
    checked: int
    failures: int


class CounterexampleOut(BaseModel):
    property: str
    degree: int
    coeffs: list[str]
    detail: str


class FuzzResponse(_Versioned):
    count: int
    degree_lo: int
    degree_hi: int
    seed: int
    margin: float
    checks: dict[str, FuzzCheckOut]
    counterexamples: list[CounterexampleOut]
    verdict_counts: dict[str, int]
    ok: bool


class BoundsIn(BaseModel):
    """The bounds-file document: {"schema": 1, "degree": n, "bounds": [[lo, hi], ...]}."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(alias="schema", serialization_alias="schema")
    degree: int
    bounds: list[tuple[CoeffIn, CoeffIn]]


class BoxRequest(BaseModel):
    box: BoundsIn
    count: int = Field(default=1000, ge=1)
    seed: int = Field(default=0, ge=0, lt=2**64)


class BoxSamplesOut(BaseModel):
    count: int
    stable: int
    not_stable: int
    stable_exemplars: list[list[float]]
    not_stable_exemplars: list[list[float]]


class BoxResponse(_Versioned):
    degree: int
    bounds: list[tuple[ScalarOut, ScalarOut]]
    cor1: Optional[CertificateOut] = None
    cor3: Optional[CertificateOut] = None
    family_unstable: bool
    samples: BoxSamplesOut


class HealthResponse(BaseModel):
    status: str
    version: str


class ErrorBody(BaseModel):
    error: str
    detail: str
