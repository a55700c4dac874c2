"""End-to-end approximate GCD of two Bernstein-form polynomials.

Five stages: find the roots of both inputs through the companion pencil,
cluster each root list, connect clusters across the two lists within a
distance threshold, take a maximum matching, and average each matched pair
into an agcd root. The agcd is the monic product of those averaged roots;
the inputs are then minimally perturbed so the agcd divides both exactly.

The sigma parameter is a heuristic radius, not a certificate: the result
reports the achieved coefficient and root distances and makes no claim that
the agcd degree is maximal over all polynomials within sigma.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bernstein import (
    BernsteinPoly,
    NormSpec,
    basis_values,
    coefficient_distance,
    eval_decasteljau,
    poly_from_roots,
)
from .clustering import RootCluster, cluster_roots
from .matching import build_root_graph, hopcroft_karp, root_semimetric
from .pencil import RootOptions, roots
from .reconstruction import approximate_polynomial, enforcement_residuals

__all__ = ["AgcdOptions", "AgcdDistances", "AgcdResult", "agcd"]

# Relative tolerance for recognizing conjugate partners among matched means.
_CONJUGATE_TOL = 1e-8


@dataclass(frozen=True)
class AgcdOptions:
    """Tuning knobs for one agcd computation.

    sigma: clustering radius; also scales the matching threshold.
    edge_factor: clusters match when their centers are within
        edge_factor * sigma (default 2).
    norm: weighted norm for the reported distances and the minimal-norm
        reconstruction.
    residual_tol: scaled residual bound for root verification and for the
        reconstruction warnings.
    cluster_before_matching: when False, every raw root is treated as its
        own multiplicity-1 cluster and the graph is built on raw roots.
    """

    sigma: float
    edge_factor: float = 2.0
    norm: NormSpec = field(default_factory=NormSpec)
    residual_tol: float = 1e-8
    cluster_before_matching: bool = True

    def __post_init__(self):
        if not self.sigma > 0:
            raise ValueError("sigma must be > 0")
        if not self.edge_factor > 0:
            raise ValueError("edge_factor must be > 0")


@dataclass(frozen=True)
class AgcdDistances:
    """Input-to-reconstruction distances: coefficient norms and root semi-metrics."""

    coefficient_p: float
    coefficient_q: float
    root_p: float
    root_q: float


@dataclass(frozen=True, eq=False)
class AgcdResult:
    """Approximate GCD in root form plus the reconstructed nearby pair.

    agcd_roots: averaged matched roots with their multiplicities.
    agcd_poly: monic expansion of those roots.
    p_tilde, q_tilde: minimally perturbed inputs divisible by the agcd.
    degree: sum of the agcd multiplicities.
    enforcement_residual_p/q: worst scaled root-condition residual of the
        reconstructions (0 when nothing was matched).
    agcd_root_residual: worst scaled residual of agcd_poly at its own roots.
    """

    agcd_roots: list[tuple[complex, int]]
    agcd_poly: BernsteinPoly
    p_tilde: BernsteinPoly
    q_tilde: BernsteinPoly
    distances: AgcdDistances
    degree: int
    enforcement_residual_p: float = 0.0
    enforcement_residual_q: float = 0.0
    agcd_root_residual: float = 0.0


def _as_clusters(root_array: np.ndarray, sigma: float, clustered: bool) -> list[RootCluster]:
    if clustered:
        return cluster_roots(list(root_array), sigma)
    return [RootCluster(center=complex(z), multiplicity=1) for z in root_array]


def _symmetrize_conjugates(means: list[complex], mults: list[int]) -> list[complex]:
    """Replace near-conjugate mean pairs by exact conjugates so products stay real."""
    out = list(means)
    used = [False] * len(out)
    for s in range(len(out)):
        if used[s] or abs(out[s].imag) <= _CONJUGATE_TOL * (1.0 + abs(out[s])):
            continue
        for u in range(s + 1, len(out)):
            if used[u] or mults[u] != mults[s]:
                continue
            if abs(out[s] - out[u].conjugate()) <= _CONJUGATE_TOL * (1.0 + abs(out[s])):
                center = 0.5 * (out[s] + out[u].conjugate())
                out[s] = center
                out[u] = center.conjugate()
                used[s] = used[u] = True
                break
    return out


def _root_distance(
    p: BernsteinPoly, p_tilde: BernsteinPoly, opts: AgcdOptions, root_opts: RootOptions
) -> float:
    """Semi-metric between the root lists of p and its reconstruction.

    Raw roots of both polynomials are matched with the same graph machinery
    (threshold edge_factor * sigma); the norm runs over matched differences
    only.
    """
    rp = roots(p, root_opts).roots
    rt = roots(p_tilde, root_opts).roots
    left = [RootCluster(center=complex(z), multiplicity=1) for z in rp]
    right = [RootCluster(center=complex(z), multiplicity=1) for z in rt]
    graph = build_root_graph(left, right, opts.sigma, opts.edge_factor)
    matched = hopcroft_karp(graph)
    return root_semimetric(list(rp), list(rt), matched.pairs, opts.norm)


def _trivial_result(p: BernsteinPoly, q: BernsteinPoly) -> AgcdResult:
    one = BernsteinPoly(np.ones(1), p.interval)
    return AgcdResult(
        agcd_roots=[],
        agcd_poly=one,
        p_tilde=p,
        q_tilde=q,
        distances=AgcdDistances(0.0, 0.0, 0.0, 0.0),
        degree=0,
    )


def agcd(p: BernsteinPoly, q: BernsteinPoly, opts: AgcdOptions) -> AgcdResult:
    """Approximate GCD of p and q for the radius opts.sigma.

    An empty matching is not an error: the result is the constant 1 with
    the inputs returned unchanged.
    """
    if p.interval != q.interval:
        raise ValueError(f"interval mismatch: {p.interval} vs {q.interval}")
    if p.degree < 1 or q.degree < 1:
        raise ValueError("both polynomials must have degree >= 1")

    root_opts = RootOptions(residual_tol=opts.residual_tol)
    roots_p = roots(p, root_opts).roots
    roots_q = roots(q, root_opts).roots

    clusters_p = _as_clusters(roots_p, opts.sigma, opts.cluster_before_matching)
    clusters_q = _as_clusters(roots_q, opts.sigma, opts.cluster_before_matching)

    graph = build_root_graph(clusters_p, clusters_q, opts.sigma, opts.edge_factor)
    matched = hopcroft_karp(graph)
    if len(matched) == 0:
        return _trivial_result(p, q)

    means = [
        0.5 * (clusters_p[i].center + clusters_q[j].center) for i, j in matched.pairs
    ]
    mults = list(matched.multiplicities)
    means = _symmetrize_conjugates(means, mults)
    agcd_roots = list(zip(means, mults))

    agcd_poly = poly_from_roots(agcd_roots, 1.0, p.interval)
    agcd_residual = 0.0
    for z, _ in agcd_roots:
        value = abs(eval_decasteljau(agcd_poly, complex(z)))
        scale = float(
            np.abs(agcd_poly.coefficients)
            @ np.abs(basis_values(agcd_poly.degree, complex(z), p.interval))
        )
        agcd_residual = max(agcd_residual, value / scale if scale > 0 else value)

    p_tilde = approximate_polynomial(p, agcd_roots, opts.norm, opts.residual_tol)
    q_tilde = approximate_polynomial(q, agcd_roots, opts.norm, opts.residual_tol)

    distances = AgcdDistances(
        coefficient_p=coefficient_distance(p, p_tilde, opts.norm),
        coefficient_q=coefficient_distance(q, q_tilde, opts.norm),
        root_p=_root_distance(p, p_tilde, opts, root_opts),
        root_q=_root_distance(q, q_tilde, opts, root_opts),
    )
    return AgcdResult(
        agcd_roots=agcd_roots,
        agcd_poly=agcd_poly,
        p_tilde=p_tilde,
        q_tilde=q_tilde,
        distances=distances,
        degree=sum(mults),
        enforcement_residual_p=float(enforcement_residuals(p_tilde, agcd_roots).max()),
        enforcement_residual_q=float(enforcement_residuals(q_tilde, agcd_roots).max()),
        agcd_root_residual=agcd_residual,
    )
