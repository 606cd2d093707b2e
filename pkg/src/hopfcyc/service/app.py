"""FastAPI service wrapping the engine.

Each endpoint is a thin adapter: pydantic model in, payload handler from
:mod:`hopfcyc.api`, pydantic model out.  Typed engine errors become HTTP 400
responses carrying the stable error code, so clients can translate them back
into the same exception types.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import api
from ..errors import EngineError
from .models import (
    AxiomReportModel,
    BuildRequest,
    BuildResponse,
    CheckCoeffRequest,
    CoeffReportModel,
    ComplexReportModel,
    ErrorModel,
    RelationReportModel,
    TowerRequest,
    VerifyHopfRequest,
)

app = FastAPI(
    title="hopfcyc",
    description=(
        "Exact-arithmetic verification service for Hopf-algebraic cyclic "
        "structures: axiom checking, coefficient compatibility, tower "
        "construction, relation verification, and homology dimensions."
    ),
    version="0.1.0",
)


@app.exception_handler(EngineError)
async def engine_error_handler(request: Request, exc: EngineError):
    return JSONResponse(
        status_code=400,
        content=ErrorModel(code=exc.code, detail=str(exc)).model_dump(),
    )


@app.get("/api/health")
def health():
    return {"status": "ok"}


@app.post("/api/verify-hopf", response_model=AxiomReportModel)
def verify_hopf(request: VerifyHopfRequest):
    return api.verify_hopf(request.model_dump())


@app.post("/api/check-coeff", response_model=CoeffReportModel)
def check_coeff(request: CheckCoeffRequest):
    return api.check_coeff(request.model_dump())


@app.post("/api/build", response_model=BuildResponse)
def build(request: BuildRequest):
    return api.build(request.model_dump(exclude_none=True))


@app.post("/api/verify-relations", response_model=RelationReportModel)
def verify_relations(request: TowerRequest):
    return api.relations(request.model_dump())


@app.post("/api/homology", response_model=ComplexReportModel)
def homology(request: TowerRequest):
    return api.homology(request.model_dump())
