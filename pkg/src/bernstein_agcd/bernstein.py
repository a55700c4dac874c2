"""Polynomials in Bernstein bases: representation, evaluation, calculus, metrics.

A degree-n polynomial on an interval [a, b] is stored as the n+1 coefficients
of the Bernstein basis B_{a,b,k}^n(x) = C(n,k) (x-a)^k (b-x)^{n-k} / (b-a)^n.
All operations here are pure functions; evaluation is exact in the recurrence
sense for any real or complex argument, inside or outside [a, b].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

__all__ = [
    "BernsteinPoly",
    "NormSpec",
    "eval_decasteljau",
    "basis_values",
    "differentiation_matrix",
    "weighted_norm",
    "coefficient_distance",
    "bernstein_multiply",
    "poly_from_roots",
]

# Relative tolerance used when pairing complex roots with their conjugates.
_CONJUGATE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class BernsteinPoly:
    """Real polynomial of degree n given by n+1 Bernstein coefficients on [a, b]."""

    coefficients: np.ndarray
    interval: tuple[float, float] = (0.0, 1.0)

    def __post_init__(self):
        coeffs = np.atleast_1d(np.asarray(self.coefficients, dtype=float))
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("coefficients must be finite")
        a, b = float(self.interval[0]), float(self.interval[1])
        if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
            raise ValueError(f"interval must satisfy a < b, got ({a}, {b})")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "interval", (a, b))

    @property
    def degree(self) -> int:
        return self.coefficients.size - 1

    def __call__(self, x):
        return eval_decasteljau(self, x)


@dataclass(frozen=True)
class NormSpec:
    """Weighted r-norm ``(sum |w_k v_k|^r)^(1/r)``, with max for r = inf.

    ``weights=None`` means unit weights of whatever length the vector has;
    an explicit weight vector must match the vector length exactly.
    """

    weights: np.ndarray | None = None
    exponent: float = 2

    def __post_init__(self):
        if self.weights is not None:
            w = np.atleast_1d(np.asarray(self.weights, dtype=float))
            if w.size == 0:
                raise ValueError("weight vector must be nonzero")
            if not np.all(np.isfinite(w)) or not np.all(w > 0):
                raise ValueError("weights must be finite and > 0")
            object.__setattr__(self, "weights", w)
        r = self.exponent
        if not (r == math.inf or (float(r).is_integer() and r >= 1)):
            raise ValueError("exponent must be a positive integer or inf")
        object.__setattr__(self, "exponent", math.inf if r == math.inf else int(r))

    def weights_for(self, n: int) -> np.ndarray:
        if self.weights is None:
            return np.ones(n)
        if self.weights.size != n:
            raise ValueError(
                f"incompatible weight vector: length {self.weights.size}, expected {n}"
            )
        return self.weights


def _local_parameter(p: BernsteinPoly, x):
    a, b = p.interval
    return (x - a) / (b - a)


def eval_decasteljau(p: BernsteinPoly, x):
    """Evaluate p at x (real or complex) by the de Casteljau recurrence.

    The convex-combination recurrence c_i,j <- (1-t) c_{i-1,j} + t c_{i-1,j+1}
    with t = (x-a)/(b-a) is algebraically exact for any t, so x may lie
    outside [a, b].
    """
    t = _local_parameter(p, x)
    levels = np.asarray(p.coefficients, dtype=np.result_type(float, type(t)))
    for _ in range(p.degree):
        levels = (1 - t) * levels[:-1] + t * levels[1:]
    value = levels[0]
    return complex(value) if np.iscomplexobj(levels) else float(value)


def basis_values(n: int, x, interval: tuple[float, float] = (0.0, 1.0)) -> np.ndarray:
    """All basis values [B_0^n(x), ..., B_n^n(x)] on the given interval.

    Built degree by degree with the same convex-combination recurrence as
    de Casteljau; one O(n^2) pass.
    """
    a, b = interval
    t = (x - a) / (b - a)
    vals = np.zeros(n + 1, dtype=np.result_type(float, type(t)))
    vals[0] = 1.0
    for j in range(1, n + 1):
        prev = vals[: j + 1].copy()
        vals[0] = (1 - t) * prev[0]
        for k in range(1, j):
            vals[k] = t * prev[k - 1] + (1 - t) * prev[k]
        vals[j] = t * prev[j - 1]
    return vals


def differentiation_matrix(n: int, interval: tuple[float, float] = (0.0, 1.0)) -> np.ndarray:
    """(n+1)x(n+1) map sending degree-n coefficients of p to those of p'.

    Composition of the degree-lowering derivative d_k = n (c_{k+1} - c_k)
    with degree elevation back to n, scaled by 1/(b-a). Each column has at
    most 3 nonzero entries.
    """
    if n < 1:
        raise ValueError("n must be >= 1; treat derivatives of constants as zero")
    a, b = float(interval[0]), float(interval[1])
    lower = np.zeros((n, n + 1))
    for k in range(n):
        lower[k, k] = -n
        lower[k, k + 1] = n
    elevate = np.zeros((n + 1, n))
    elevate[0, 0] = 1.0
    for k in range(1, n):
        elevate[k, k - 1] = k / n
        elevate[k, k] = 1 - k / n
    elevate[n, n - 1] = 1.0
    return (elevate @ lower) / (b - a)


def weighted_norm(v, spec: NormSpec = NormSpec()) -> float:
    """Weighted r-norm of a real or complex vector; 0 for the empty vector."""
    v = np.atleast_1d(np.asarray(v))
    if v.size == 0:
        return 0.0
    scaled = spec.weights_for(v.size) * np.abs(v)
    if spec.exponent == math.inf:
        return float(scaled.max())
    return float(np.sum(scaled ** spec.exponent) ** (1.0 / spec.exponent))


def coefficient_distance(p: BernsteinPoly, q: BernsteinPoly, spec: NormSpec = NormSpec()) -> float:
    """Weighted norm of the coefficient difference; degrees and intervals must match."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    if p.interval != q.interval:
        raise ValueError(f"interval mismatch: {p.interval} vs {q.interval}")
    return weighted_norm(p.coefficients - q.coefficients, spec)


def _multiply_coefficients(pc: np.ndarray, qc: np.ndarray) -> np.ndarray:
    m, n = pc.size - 1, qc.size - 1
    out = np.zeros(m + n + 1, dtype=np.result_type(pc, qc))
    for i in range(m + 1):
        for j in range(n + 1):
            k = i + j
            out[k] += math.comb(m, i) * math.comb(n, j) / math.comb(m + n, k) * pc[i] * qc[j]
    return out


def bernstein_multiply(p: BernsteinPoly, q: BernsteinPoly) -> BernsteinPoly:
    """Product polynomial of degree deg p + deg q on the shared interval.

    The product rule c_k = sum_{i+j=k} C(m,i) C(n,j) / C(m+n,k) p_i q_j holds
    on any interval, since the (b-a) normalizations combine.
    """
    if p.interval != q.interval:
        raise ValueError(f"interval mismatch: {p.interval} vs {q.interval}")
    return BernsteinPoly(_multiply_coefficients(p.coefficients, q.coefficients), p.interval)


def poly_from_roots(
    roots: Iterable[tuple[complex, int]],
    scale: float = 1.0,
    interval: tuple[float, float] = (0.0, 1.0),
) -> BernsteinPoly:
    """scale * prod (x - z)^m expanded directly in the Bernstein basis.

    Each linear factor (x - z) has degree-1 coefficients [a - z, b - z];
    factors are combined by repeated Bernstein multiplication, never through
    a power-basis detour. The root multiset must be conjugate-closed so the
    result is real; conjugate pairs are multiplied as real quadratics.
    """
    a, b = float(interval[0]), float(interval[1])
    flat: list[complex] = []
    for center, mult in roots:
        if mult < 1:
            raise ValueError("multiplicities must be >= 1")
        flat.extend([complex(center)] * int(mult))

    reals: list[float] = []
    unpaired: list[complex] = []
    pairs: list[complex] = []
    for z in flat:
        if abs(z.imag) <= _CONJUGATE_TOL * (1.0 + abs(z)):
            reals.append(z.real)
            continue
        for idx, w in enumerate(unpaired):
            if abs(z - w.conjugate()) <= _CONJUGATE_TOL * (1.0 + abs(z)):
                del unpaired[idx]
                pairs.append(z if z.imag > 0 else w)
                break
        else:
            unpaired.append(z)
    if unpaired:
        raise ValueError(
            "complex roots are not conjugate-closed; cannot build a real polynomial"
        )

    coeffs = np.array([float(scale)])
    for r in reals:
        coeffs = _multiply_coefficients(coeffs, np.array([a - r, b - r]))
    for z in pairs:
        lin = np.array([a - z, b - z], dtype=complex)
        quad = _multiply_coefficients(lin, lin.conjugate())
        coeffs = _multiply_coefficients(coeffs, quad.real)
    return BernsteinPoly(coeffs, (a, b))
