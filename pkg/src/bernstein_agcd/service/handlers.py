"""Request-to-report translation, used in-process by the CLI and over HTTP."""

from __future__ import annotations

import time

from ..experiment import table_rows
from ..pencil import RootOptions, roots
from ..pipeline import agcd
from .models import (
    AgcdReport,
    AgcdRequest,
    AgcdRootModel,
    DiagnosticsModel,
    DistancesModel,
    PolynomialModel,
    RootsReport,
    RootsRequest,
    TableReport,
    TableRequest,
    TableRowModel,
)


def run_agcd(request: AgcdRequest) -> AgcdReport:
    started = time.perf_counter()
    result = agcd(request.p.to_poly(), request.q.to_poly(), request.options.to_options())
    elapsed = time.perf_counter() - started
    return AgcdReport(
        inputs=request,
        degree=result.degree,
        agcd_roots=[
            AgcdRootModel(real=z.real, imag=z.imag, multiplicity=m)
            for z, m in result.agcd_roots
        ],
        agcd_coefficients=[float(c) for c in result.agcd_poly.coefficients],
        interval=result.agcd_poly.interval,
        p_tilde=PolynomialModel.from_poly(result.p_tilde),
        q_tilde=PolynomialModel.from_poly(result.q_tilde),
        distances=DistancesModel(
            coefficient_p=result.distances.coefficient_p,
            coefficient_q=result.distances.coefficient_q,
            root_p=result.distances.root_p,
            root_q=result.distances.root_q,
        ),
        diagnostics=DiagnosticsModel(
            enforcement_residual_p=result.enforcement_residual_p,
            enforcement_residual_q=result.enforcement_residual_q,
            agcd_root_residual=result.agcd_root_residual,
        ),
        elapsed_seconds=elapsed,
    )


def run_roots(request: RootsRequest) -> RootsReport:
    found = roots(
        request.polynomial.to_poly(), RootOptions(residual_tol=request.residual_tol)
    )
    return RootsReport(
        roots=[(z.real, z.imag) for z in found.roots],
        discarded_count=found.discarded_count,
        residual_ok=[bool(ok) for ok in found.residual_ok],
    )


def run_table(request: TableRequest) -> TableReport:
    rows = table_rows(
        count=request.count,
        max_degree=request.max_degree,
        gcd_degree=request.gcd_degree,
        noise=request.noise,
        sigma=request.sigma,
        seed=request.seed,
        edge_factor=request.edge_factor,
        box=request.box,
        min_separation=request.min_separation,
    )
    return TableReport(
        inputs=request,
        rows=[
            TableRowModel(
                max_degree=row.max_degree,
                agcd_degree=row.agcd_degree,
                coefficient_p=row.coefficient_p,
                root_p=row.root_p,
                coefficient_q=row.coefficient_q,
                root_q=row.root_q,
            )
            for row in rows
        ],
    )
