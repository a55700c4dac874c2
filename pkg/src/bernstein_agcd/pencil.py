"""Roots of a Bernstein-form polynomial via a companion matrix pencil.

For P(x) = sum a_k B_k^n(x) on [0, 1] there is an n x n pair (A, B) with
det(xB - A) = P(x), so the roots of P are the generalized eigenvalues of
(A, B). This avoids any conversion to the power basis. General intervals
are handled by the affine substitution t = (x - a)/(b - a), under which the
coefficient vector is unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .bernstein import BernsteinPoly, basis_values, eval_decasteljau

__all__ = [
    "CompanionPencil",
    "RootList",
    "RootOptions",
    "build_companion_pencil",
    "generalized_eigenvalues",
    "roots",
]


@dataclass(frozen=True, eq=False)
class CompanionPencil:
    """Matrix pair (A, B) with det(xB - A) equal to the source polynomial."""

    A: np.ndarray
    B: np.ndarray
    degree: int


@dataclass(frozen=True, eq=False)
class RootList:
    """Finite roots of a polynomial, with residual verification.

    ``residual_ok[i]`` records whether |P(z_i)| passed the scaled residual
    bound; failing roots are kept (downstream clustering tolerates them).
    ``discarded_count`` counts eigenvalues classified as infinite.
    """

    roots: np.ndarray
    discarded_count: int
    residuals: np.ndarray
    residual_ok: np.ndarray


@dataclass(frozen=True)
class RootOptions:
    """Thresholds for eigenvalue filtering and residual verification.

    beta_tol: an eigenvalue pair (alpha, beta) counts as infinite when
        beta <= beta_tol * max(beta).
    residual_tol: a root z passes verification when
        |P(z)| <= residual_tol * sum_k |c_k| |B_k^n(z)|.
    imag_tol: imaginary parts below imag_tol * (1 + |z|) are zeroed
        (inputs are real polynomials, so roots come in conjugate pairs).
    """

    beta_tol: float = 1e-10
    residual_tol: float = 1e-8
    imag_tol: float = 1e-10


def build_companion_pencil(p: BernsteinPoly) -> CompanionPencil:
    """Companion pencil of the reference-interval polynomial with p's coefficients.

    A carries [-a_{n-1}, ..., -a_0] in its first row and ones on the
    subdiagonal. B agrees with A except B[0,0] = -a_{n-1} + a_n/n, and has
    diagonal tail 2/(n-1), 3/(n-2), ..., n/1.
    """
    n = p.degree
    if n < 1:
        raise ValueError("constant polynomial has no companion pencil")
    c = p.coefficients
    A = np.zeros((n, n))
    B = np.zeros((n, n))
    A[0, :] = -c[n - 1 :: -1]
    B[0, :] = A[0, :]
    B[0, 0] += c[n] / n
    for i in range(1, n):
        A[i, i - 1] = 1.0
        B[i, i - 1] = 1.0
        B[i, i] = (i + 1) / (n - i)
    return CompanionPencil(A=A, B=B, degree=n)


def generalized_eigenvalues(pencil: CompanionPencil) -> list[tuple[complex, float]]:
    """All n eigenvalue pairs (alpha, beta) of the pencil, beta >= 0.

    Solved densely by the QZ iteration (backward stable on the pair); an
    eigenvalue is alpha/beta when beta is not negligible and infinite when
    beta = 0. Non-convergence raises scipy's LinAlgError with the LAPACK
    diagnostic attached.
    """
    hom = scipy.linalg.eig(pencil.A, pencil.B, right=False, homogeneous_eigvals=True)
    alphas = np.asarray(hom[0], dtype=complex)
    betas = np.real(np.asarray(hom[1]))
    pairs = []
    for alpha, beta in zip(alphas, betas):
        if beta < 0:
            alpha, beta = -alpha, -beta
        pairs.append((complex(alpha), float(beta)))
    return pairs


def _residual_scale(p: BernsteinPoly, x) -> float:
    """Componentwise evaluation magnitude sum_k |c_k| |B_k^n(x)|."""
    vals = basis_values(p.degree, x, p.interval)
    return float(np.sum(np.abs(p.coefficients) * np.abs(vals)))


def roots(p: BernsteinPoly, opts: RootOptions = RootOptions()) -> RootList:
    """Finite roots of p, sorted by (real, imaginary) part.

    The pencil is built for the reference parameter t = (x - a)/(b - a)
    (same coefficients), eigenvalues with negligible beta are discarded as
    infinite, finite ones are mapped back by x = a + (b - a) t, and every
    root is residual-checked with eval_decasteljau.
    """
    if p.degree < 1:
        raise ValueError("degree must be >= 1")
    if np.all(p.coefficients == 0.0):
        raise ValueError("polynomial is identically zero")

    reference = BernsteinPoly(p.coefficients, (0.0, 1.0))
    pencil = build_companion_pencil(reference)
    pairs = generalized_eigenvalues(pencil)

    # Relative cut against the largest beta, plus an absolute floor at the
    # rounding scale of B: when the polynomial is a constant in disguise,
    # every beta is at roundoff level and all eigenvalues are infinite.
    beta_max = max(beta for _, beta in pairs)
    beta_floor = np.finfo(float).eps * max(1.0, float(np.linalg.norm(pencil.B)))
    cutoff = max(opts.beta_tol * beta_max, beta_floor)
    finite = [(alpha, beta) for alpha, beta in pairs if beta > cutoff]
    discarded = len(pairs) - len(finite)
    if not finite:
        raise ValueError("no finite roots: all eigenvalues are infinite")

    t = np.array([alpha / beta for alpha, beta in finite])
    small_imag = np.abs(t.imag) < opts.imag_tol * (1.0 + np.abs(t))
    t[small_imag] = t[small_imag].real

    a, b = p.interval
    z = a + (b - a) * t
    order = np.lexsort((z.imag, z.real))
    z = z[order]

    residuals = np.array([abs(eval_decasteljau(p, complex(zi))) for zi in z])
    scales = np.array([_residual_scale(p, complex(zi)) for zi in z])
    ok = residuals <= opts.residual_tol * scales
    return RootList(roots=z, discarded_count=discarded, residuals=residuals, residual_ok=ok)
