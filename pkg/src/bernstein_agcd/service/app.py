"""FastAPI application exposing the agcd pipeline over HTTP."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from .handlers import run_agcd, run_roots, run_table
from .models import (
    AgcdReport,
    AgcdRequest,
    ErrorBody,
    ErrorDetail,
    RootsReport,
    RootsRequest,
    TableReport,
    TableRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(title="bernstein-agcd", version=__version__)

    @app.exception_handler(ValueError)
    async def _domain_error(request: Request, exc: ValueError) -> JSONResponse:
        body = ErrorBody(error=ErrorDetail(code="domain", message=str(exc)))
        return JSONResponse(status_code=400, content=body.model_dump())

    @app.get("/health")
    async def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/agcd", response_model=AgcdReport)
    async def agcd_endpoint(request: AgcdRequest) -> AgcdReport:
        return run_agcd(request)

    @app.post("/roots", response_model=RootsReport)
    async def roots_endpoint(request: RootsRequest) -> RootsReport:
        return run_roots(request)

    @app.post("/table", response_model=TableReport)
    async def table_endpoint(request: TableRequest) -> TableReport:
        return run_table(request)

    return app
