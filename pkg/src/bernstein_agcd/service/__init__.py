"""HTTP service layer: pydantic models, handlers, and the FastAPI app."""

from .app import create_app
from .handlers import run_agcd, run_roots, run_table
from .models import (
    AgcdReport,
    AgcdRequest,
    AgcdRootModel,
    DiagnosticsModel,
    DistancesModel,
    ErrorBody,
    ErrorDetail,
    OptionsModel,
    PolynomialModel,
    RootsReport,
    RootsRequest,
    TableReport,
    TableRequest,
    TableRowModel,
)

__all__ = [
    "AgcdReport",
    "AgcdRequest",
    "AgcdRootModel",
    "DiagnosticsModel",
    "DistancesModel",
    "ErrorBody",
    "ErrorDetail",
    "OptionsModel",
    "PolynomialModel",
    "RootsReport",
    "RootsRequest",
    "TableReport",
    "TableRequest",
    "TableRowModel",
    "create_app",
    "run_agcd",
    "run_roots",
    "run_table",
]
