"""FastAPI app exposing the analysis pipeline.

Each endpoint is a thin wrapper over a plain handler function; the CLI
calls the same handlers in-process, so local and remote clients share
one code path.  Domain errors map to HTTP 400 with a structured body
naming the error class.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__, boxes, criteria, fuzzing, hurwitz, roots
from ..errors import LengthMismatch, ParseError, PolystabError
from ..poly import Polynomial, make_polynomial, monic_from_leading, parse_scalar, scalar_to_json
from . import schemas


def build_polynomial(submitted: schemas.PolynomialIn) -> Polynomial:
    """Parse, normalize and validate a submitted polynomial."""
    if not submitted.coeffs:
        raise ParseError("at least one coefficient is required")
    coeffs = [parse_scalar(c, submitted.exact) for c in submitted.coeffs]
    if submitted.leading is not None:
        lead = parse_scalar(submitted.leading, submitted.exact)
        p = monic_from_leading(lead, coeffs, exact=submitted.exact)
    else:
        p = make_polynomial(len(coeffs), coeffs)
    if submitted.degree is not None and submitted.degree != p.degree:
        raise LengthMismatch(
            f"declared degree {submitted.degree} but got {p.degree} coefficients"
        )
    return p


def _echo(p: Polynomial) -> schemas.PolynomialEcho:
    return schemas.PolynomialEcho(
        degree=p.degree,
        domain="exact" if p.exact else "float",
        coeffs=[scalar_to_json(c) for c in p.coeffs],
    )


def _witnesses(cert: criteria.Certificate) -> list[schemas.WitnessOut]:
    return [(name, scalar_to_json(value)) for name, value in cert.witnesses]


def _certificate(cert: criteria.Certificate) -> schemas.CertificateOut:
    return schemas.CertificateOut(kind=cert.kind.value, witnesses=_witnesses(cert))


def _root_report(report: roots.RootReport) -> schemas.RootReportOut:
    return schemas.RootReportOut(
        roots=[schemas.RootOut(re=r.real, im=r.imag) for r in report.roots],
        max_real_part=report.max_real_part,
        classification=report.classification.value,
        residual=report.residual,
        margin=report.margin,
        iterations=report.iterations,
    )


def handle_analyze(req: schemas.AnalyzeRequest) -> schemas.AnalyzeResponse:
    start = time.perf_counter()
    p = build_polynomial(req.polynomial)
    verdict = criteria.analyze(p)
    minors = hurwitz.all_minors(p)
    root_report = None
    if req.include_roots:
        root_report = _root_report(roots.find_roots(p, margin=req.margin))
    elapsed_ms = (time.perf_counter() - start) * 1e3
    return schemas.AnalyzeResponse(
        input=_echo(p),
        minors=[scalar_to_json(v) for v in minors.values],
        verdict=verdict.status.value,
        certificate=verdict.certificate.kind.value,
        witnesses=_witnesses(verdict.certificate),
        roots=root_report,
        timing_ms=elapsed_ms,
    )


def handle_minors(req: schemas.MinorsRequest) -> schemas.MinorsResponse:
    p = build_polynomial(req.polynomial)
    minors = hurwitz.all_minors(p)
    delta4 = None
    note = None
    if p.degree >= 4:
        determinant = minors.values[3]
        expanded = hurwitz.delta4_expanded(p)
        factored = hurwitz.delta4_factored(p)
        if p.exact:
            agree = determinant == expanded == factored
        else:
            scale = max(abs(determinant), abs(expanded), abs(factored), 1e-300)
            agree = (
                abs(determinant - expanded) <= 1e-10 * scale
                and abs(determinant - factored) <= 1e-10 * scale
            )
        delta4 = schemas.Delta4Routes(
            determinant=scalar_to_json(determinant),
            expanded=scalar_to_json(expanded),
            factored=scalar_to_json(factored),
            agree=bool(agree),
        )
    else:
        note = "delta4 routes need degree >= 4; omitted"
    return schemas.MinorsResponse(
        input=_echo(p),
        minors=[scalar_to_json(v) for v in minors.values],
        delta4=delta4,
        note=note,
    )


def handle_roots(req: schemas.RootsRequest) -> schemas.RootsResponse:
    p = build_polynomial(req.polynomial)
    report = roots.find_roots(p, margin=req.margin)
    return schemas.RootsResponse(input=_echo(p), report=_root_report(report))


def handle_fuzz(req: schemas.FuzzRequest) -> schemas.FuzzResponse:
    if req.degree_lo > req.degree_hi:
        raise ParseError(f"bad degree range {req.degree_lo}..{req.degree_hi}")
    report = fuzzing.run_fuzz(
        count=req.count,
        degree_lo=req.degree_lo,
        degree_hi=req.degree_hi,
        seed=req.seed,
        margin=req.margin,
    )
    return schemas.FuzzResponse(
        count=report.count,
        degree_lo=report.degree_lo,
        degree_hi=report.degree_hi,
        seed=report.seed,
        margin=report.margin,
        checks={
            name: schemas.FuzzCheckOut(checked=c.checked, failures=c.failures)
            for name, c in report.checks.items()
        },
        counterexamples=[
            schemas.CounterexampleOut(
                property=ce.property,
                degree=ce.degree,
                coeffs=list(ce.coeffs),
                detail=ce.detail,
            )
            for ce in report.counterexamples
        ],
        verdict_counts=report.verdict_counts,
        ok=report.ok,
    )


def handle_box(req: schemas.BoxRequest) -> schemas.BoxResponse:
    box = boxes.load_box(
        {
            "schema": req.box.schema_version,
            "degree": req.box.degree,
            "bounds": [list(pair) for pair in req.box.bounds],
        }
    )
    cor1 = boxes.box_cor1(box)
    cor3 = boxes.box_cor3(box)
    summary = boxes.box_sample_verdicts(box, req.count, req.seed)
    return schemas.BoxResponse(
        degree=box.degree,
        bounds=[(scalar_to_json(lo), scalar_to_json(hi)) for lo, hi in box.bounds],
        cor1=_certificate(cor1) if cor1 else None,
        cor3=_certificate(cor3) if cor3 else None,
        family_unstable=cor1 is not None or cor3 is not None,
        samples=schemas.BoxSamplesOut(
            count=summary.count,
            stable=summary.stable,
            not_stable=summary.not_stable,
            stable_exemplars=[list(c) for c in summary.stable_exemplars],
            not_stable_exemplars=[list(c) for c in summary.not_stable_exemplars],
        ),
    )


app = FastAPI(
    title="polystab",
    version=__version__,
    description="Hurwitz stability analysis of monic real polynomials.",
)


@app.exception_handler(PolystabError)
async def domain_error_handler(_: Request, exc: PolystabError) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error": type(exc).__name__, "detail": str(exc)},
    )


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(status="ok", version=__version__)


@app.post("/v1/analyze", response_model=schemas.AnalyzeResponse)
def analyze_endpoint(req: schemas.AnalyzeRequest) -> schemas.AnalyzeResponse:
    return handle_analyze(req)


@app.post("/v1/minors", response_model=schemas.MinorsResponse)
def minors_endpoint(req: schemas.MinorsRequest) -> schemas.MinorsResponse:
    return handle_minors(req)


@app.post("/v1/roots", response_model=schemas.RootsResponse)
def roots_endpoint(req: schemas.RootsRequest) -> schemas.RootsResponse:
    return handle_roots(req)


@app.post("/v1/fuzz", response_model=schemas.FuzzResponse)
def fuzz_endpoint(req: schemas.FuzzRequest) -> schemas.FuzzResponse:
    return handle_fuzz(req)


@app.post("/v1/box", response_model=schemas.BoxResponse)
def box_endpoint(req: schemas.BoxRequest) -> schemas.BoxResponse:
    return handle_box(req)
