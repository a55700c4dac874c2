"""Pydantic request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

import math
from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from ..bernstein import BernsteinPoly, NormSpec
from ..pipeline import AgcdOptions


class PolynomialModel(BaseModel):
    basis: Literal["bernstein"] = "bernstein"
    interval: tuple[float, float] = (0.0, 1.0)
    coefficients: list[float] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_interval(self):
        a, b = self.interval
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ValueError(f"interval must satisfy a < b, got ({a}, {b})")
        if not all(math.isfinite(c) for c in self.coefficients):
            raise ValueError("coefficients must be finite")
        return self

    def to_poly(self) -> BernsteinPoly:
        return BernsteinPoly(self.coefficients, self.interval)

    @classmethod
    def from_poly(cls, p: BernsteinPoly) -> "PolynomialModel":
        return cls(interval=p.interval, coefficients=[float(c) for c in p.coefficients])


class OptionsModel(BaseModel):
    sigma: float = Field(gt=0)
    edge_factor: float = Field(default=2.0, gt=0)
    norm_r: int | Literal["inf"] = 2
    weights: list[float] | None = None
    residual_tol: float = Field(default=1e-8, gt=0)
    raw_root_matching: bool = False

    @field_validator("norm_r")
    @classmethod
    def _check_norm_r(cls, v):
        if v != "inf" and v < 1:
            raise ValueError("norm_r must be a positive integer or 'inf'")
        return v

    def to_options(self) -> AgcdOptions:
        exponent = math.inf if self.norm_r == "inf" else self.norm_r
        return AgcdOptions(
            sigma=self.sigma,
            edge_factor=self.edge_factor,
            norm=NormSpec(weights=self.weights, exponent=exponent),
            residual_tol=self.residual_tol,
            cluster_before_matching=not self.raw_root_matching,
        )


class AgcdRequest(BaseModel):
    p: PolynomialModel
    q: PolynomialModel
    options: OptionsModel


class AgcdRootModel(BaseModel):
    real: float
    imag: float
    multiplicity: int


class DistancesModel(BaseModel):
    coefficient_p: float
    coefficient_q: float
    root_p: float
    root_q: float


class DiagnosticsModel(BaseModel):
    enforcement_residual_p: float
    enforcement_residual_q: float
    agcd_root_residual: float


class AgcdReport(BaseModel):
    """Full machine-readable result of one agcd run, echoing its inputs."""

    inputs: AgcdRequest
    degree: int
    agcd_roots: list[AgcdRootModel]
    agcd_coefficients: list[float]
    interval: tuple[float, float]
    p_tilde: PolynomialModel
    q_tilde: PolynomialModel
    distances: DistancesModel
    diagnostics: DiagnosticsModel
    elapsed_seconds: float


class RootsRequest(BaseModel):
    polynomial: PolynomialModel
    residual_tol: float = Field(default=1e-8, gt=0)


class RootsReport(BaseModel):
    roots: list[tuple[float, float]]
    discarded_count: int
    residual_ok: list[bool]


class TableRequest(BaseModel):
    count: int = Field(ge=1)
    max_degree: int = Field(ge=1)
    gcd_degree: int = Field(ge=1)
    noise: float = Field(ge=0)
    sigma: float = Field(gt=0)
    seed: int
    edge_factor: float = Field(default=2.0, gt=0)
    box: tuple[float, float] = (-1.0, 2.0)
    min_separation: float = Field(default=0.1, ge=0)

    @model_validator(mode="after")
    def _check_degrees(self):
        if self.gcd_degree > self.max_degree:
            raise ValueError("gcd_degree cannot exceed max_degree")
        lo, hi = self.box
        if not lo < hi:
            raise ValueError("box must satisfy lo < hi")
        return self


class TableRowModel(BaseModel):
    max_degree: int
    agcd_degree: int
    coefficient_p: float
    root_p: float
    coefficient_q: float
    root_q: float


class TableReport(BaseModel):
    inputs: TableRequest
    rows: list[TableRowModel]


class ErrorDetail(BaseModel):
    code: str
    message: str


class ErrorBody(BaseModel):
    error: ErrorDetail
