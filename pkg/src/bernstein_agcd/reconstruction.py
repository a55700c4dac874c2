"""Minimal perturbation of a polynomial making prescribed roots exact.

Writes the perturbed polynomial as sum p_i (1 + dp_i) B_i^n(x): each
coefficient moves relative to itself, so zero coefficients never move. For
target roots alpha_j with multiplicities d_j, the conditions
(d/dx)^k Ptilde(alpha_j) = 0 for k < d_j are linear in dp, and the system is
solved for the residual-minimal solution of smallest weighted norm.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bernstein import BernsteinPoly, NormSpec, basis_values, differentiation_matrix

__all__ = [
    "PerturbationSystem",
    "build_perturbation_system",
    "solve_min_norm",
    "approximate_polynomial",
    "enforcement_residuals",
]

# Singular values below RANK_TOL * sigma_max count as zero in the solve.
RANK_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PerturbationSystem:
    """Linear constraints on the relative perturbations dp.

    One row per (target root, derivative order); columns cover only the
    nonzero coefficients of the source polynomial (``zero_mask`` lists the
    indices forced to stay zero, whose columns are removed).
    """

    matrix: np.ndarray
    rhs: np.ndarray
    zero_mask: np.ndarray
    degree: int

    @property
    def active_indices(self) -> np.ndarray:
        keep = np.ones(self.degree + 1, dtype=bool)
        keep[self.zero_mask] = False
        return np.nonzero(keep)[0]


def build_perturbation_system(
    p: BernsteinPoly, targets: Sequence[tuple[complex, int]]
) -> PerturbationSystem:
    """Constraint rows for each target root and derivative order k < d.

    Row for (alpha, k): phi(alpha) . D^k . diag(c) restricted to nonzero
    coefficients, where phi collects the basis values and D is the
    differentiation matrix; right-hand side -(D^k c)(alpha). Rows for
    complex targets stay complex here; the solver splits them into real and
    imaginary parts.
    """
    if len(targets) == 0:
        raise ValueError("targets must be nonempty")
    c = p.coefficients
    n = p.degree
    if np.all(c == 0.0):
        raise ValueError("polynomial is identically zero")
    total = sum(int(d) for _, d in targets)
    if any(d < 1 for _, d in targets):
        raise ValueError("multiplicities must be >= 1")
    if total > n:
        raise ValueError(f"over-constrained: {total} root conditions exceed degree {n}")

    zero_mask = np.nonzero(c == 0.0)[0]
    active = np.nonzero(c != 0.0)[0]
    diff = differentiation_matrix(n, p.interval)

    any_complex = any(abs(complex(alpha).imag) > 0 for alpha, _ in targets)
    dtype = complex if any_complex else float
    rows = np.zeros((total, active.size), dtype=dtype)
    rhs = np.zeros(total, dtype=dtype)

    r = 0
    for alpha, d in targets:
        alpha = complex(alpha) if any_complex else float(np.real(alpha))
        power = np.eye(n + 1)
        for _ in range(int(d)):
            phi = basis_values(n, alpha, p.interval)
            row_full = (phi @ power) * c
            rows[r, :] = row_full[active]
            rhs[r] = -(phi @ (power @ c))
            power = diff @ power
            r += 1
    return PerturbationSystem(matrix=rows, rhs=rhs, zero_mask=zero_mask, degree=n)


def solve_min_norm(system: PerturbationSystem, spec: NormSpec = NormSpec()) -> np.ndarray:
    """Residual-minimal solution of smallest weighted norm, via SVD.

    Weighted specs are handled by rescaling to u_i = w_i dp_i, solving for
    the minimum-2-norm u, and mapping back (the exponent of the spec applies
    to distance reporting, not to this solve). Returns the full-length dp
    vector with zeros at the masked indices.
    """
    active = system.active_indices
    w = spec.weights_for(system.degree + 1)[active]
    A = system.matrix / w  # columns scaled so unknowns become u = w * dp
    b = system.rhs
    if np.iscomplexobj(A) or np.iscomplexobj(b):
        A = np.vstack([A.real, A.imag])
        b = np.concatenate([np.real(b), np.imag(b)])
    u, _, rank, _ = np.linalg.lstsq(A, b, rcond=RANK_TOL)
    if rank == 0 and np.linalg.norm(b) > 0:
        raise ValueError("infeasible constraints: system has rank 0 with nonzero rhs")
    dp = np.zeros(system.degree + 1)
    dp[active] = u / w
    return dp


def enforcement_residuals(
    p: BernsteinPoly, targets: Sequence[tuple[complex, int]]
) -> np.ndarray:
    """Scaled derivative residuals |(D^k p)(alpha)| / scale for each constraint.

    The scale is the componentwise evaluation magnitude of the derivative's
    coefficient vector, so values are comparable across rows; one entry per
    (target, order) pair, in row order.
    """
    n = p.degree
    diff = differentiation_matrix(n, p.interval)
    out = []
    for alpha, d in targets:
        alpha = complex(alpha)
        dc = p.coefficients.astype(float)
        for _ in range(int(d)):
            phi = basis_values(n, alpha, p.interval)
            value = abs(phi @ dc)
            scale = float(np.abs(phi) @ np.abs(dc))
            out.append(value / scale if scale > 0 else value)
            dc = diff @ dc
    return np.array(out)


def approximate_polynomial(
    p: BernsteinPoly,
    targets: Sequence[tuple[complex, int]],
    spec: NormSpec = NormSpec(),
    residual_tol: float = 1e-8,
) -> BernsteinPoly:
    """Nearby polynomial with every target as a root of its multiplicity.

    Coefficients become p_i (1 + dp_i) with dp the minimal-norm solution of
    the constraint system. If a root condition is not met within
    residual_tol after the solve, a warning carries the worst residual
    rather than failing silently.
    """
    system = build_perturbation_system(p, targets)
    dp = solve_min_norm(system, spec)
    result = BernsteinPoly(p.coefficients * (1.0 + dp), p.interval)
    worst = float(enforcement_residuals(result, targets).max())
    if worst > residual_tol:
        warnings.warn(
            f"root enforcement residual {worst:.3e} exceeds tolerance {residual_tol:.1e}",
            stacklevel=2,
        )
    return result
