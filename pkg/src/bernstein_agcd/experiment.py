"""Seeded random planted-gcd instances and the distance-comparison table.

Each instance plants a known common factor: G, A, B are built from random
real roots, P = G*A and Q = G*B are expanded by Bernstein multiplication,
and optional relative noise is applied to the coefficients. Running the
pipeline on such a pair has a ground truth to compare against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bernstein import BernsteinPoly, bernstein_multiply, poly_from_roots
from .pipeline import AgcdOptions, AgcdResult, agcd

__all__ = ["PlantedInstance", "TableRow", "generate_planted_pair", "table_rows"]


@dataclass(frozen=True, eq=False)
class PlantedInstance:
    """A (P, Q) pair with known common roots."""

    p: BernsteinPoly
    q: BernsteinPoly
    common_roots: list[float]
    p_only_roots: list[float]
    q_only_roots: list[float]


@dataclass(frozen=True)
class TableRow:
    """One table line: degrees plus the four distances."""

    max_degree: int
    agcd_degree: int
    coefficient_p: float
    root_p: float
    coefficient_q: float
    root_q: float


def _sample_separated(
    rng: np.random.Generator,
    count: int,
    box: tuple[float, float],
    min_separation: float,
) -> np.ndarray:
    """Uniform points in [lo, hi] with pairwise separation >= min_separation.

    Spacing construction: draw in the box shrunk by the total gap budget,
    sort, and shift each point by its share of the budget. Exact (never
    rejects), and uniform over the admissible configurations. The order is
    then shuffled so callers can slice off role groups without positional
    bias.
    """
    lo, hi = box
    if not hi > lo:
        raise ValueError("box must satisfy lo < hi")
    free = (hi - lo) - (count - 1) * min_separation
    if count > 1 and free <= 0:
        raise ValueError(
            f"could not place {count} roots at separation {min_separation} in {box}"
        )
    pts = np.sort(rng.uniform(0.0, free, size=count))
    pts += lo + min_separation * np.arange(count)
    return rng.permutation(pts)


def generate_planted_pair(
    rng: np.random.Generator,
    gcd_degree: int,
    p_cofactor_degree: int,
    q_cofactor_degree: int,
    noise: float = 0.0,
    box: tuple[float, float] = (-1.0, 2.0),
    min_separation: float = 0.1,
    interval: tuple[float, float] = (0.0, 1.0),
) -> PlantedInstance:
    """P = G*A and Q = G*B from separated random real roots, plus relative noise.

    All planted roots (common and cofactor) are pairwise separated by at
    least ``min_separation``, so a matching radius below half of it cannot
    bridge distinct roots.
    """
    if gcd_degree < 1:
        raise ValueError("gcd_degree must be >= 1")
    if p_cofactor_degree < 0 or q_cofactor_degree < 0:
        raise ValueError("cofactor degrees must be >= 0")
    total = gcd_degree + p_cofactor_degree + q_cofactor_degree
    pts = _sample_separated(rng, total, box, min_separation)
    common = list(pts[:gcd_degree])
    p_only = list(pts[gcd_degree : gcd_degree + p_cofactor_degree])
    q_only = list(pts[gcd_degree + p_cofactor_degree :])

    g = poly_from_roots([(z, 1) for z in common], 1.0, interval)
    a = poly_from_roots([(z, 1) for z in p_only], 1.0, interval)
    b = poly_from_roots([(z, 1) for z in q_only], 1.0, interval)
    p = bernstein_multiply(g, a)
    q = bernstein_multiply(g, b)

    if noise > 0:
        p = BernsteinPoly(
            p.coefficients * (1.0 + noise * rng.uniform(-1, 1, p.coefficients.shape)),
            interval,
        )
        q = BernsteinPoly(
            q.coefficients * (1.0 + noise * rng.uniform(-1, 1, q.coefficients.shape)),
            interval,
        )
    return PlantedInstance(p=p, q=q, common_roots=common, p_only_roots=p_only, q_only_roots=q_only)


def table_rows(
    count: int,
    max_degree: int,
    gcd_degree: int,
    noise: float,
    sigma: float,
    seed: int,
    edge_factor: float = 2.0,
    box: tuple[float, float] = (-1.0, 2.0),
    min_separation: float = 0.1,
) -> list[TableRow]:
    """Run the pipeline on ``count`` seeded planted pairs and tabulate distances.

    P always has degree ``max_degree``; Q's cofactor degree is drawn
    uniformly from 0..(max_degree - gcd_degree), so both degrees are capped
    by ``max_degree``. Rows come out in generation order; the same seed
    reproduces them exactly.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if not 1 <= gcd_degree <= max_degree:
        raise ValueError("need 1 <= gcd_degree <= max_degree")
    if noise < 0:
        raise ValueError("noise must be >= 0")
    rng = np.random.default_rng(seed)
    rows = []
    for _ in range(count):
        q_cofactor = int(rng.integers(0, max_degree - gcd_degree + 1))
        instance = generate_planted_pair(
            rng,
            gcd_degree,
            max_degree - gcd_degree,
            q_cofactor,
            noise=noise,
            box=box,
            min_separation=min_separation,
        )
        result: AgcdResult = agcd(
            instance.p, instance.q, AgcdOptions(sigma=sigma, edge_factor=edge_factor)
        )
        rows.append(
            TableRow(
                max_degree=max(instance.p.degree, instance.q.degree),
                agcd_degree=result.degree,
                coefficient_p=result.distances.coefficient_p,
                root_p=result.distances.root_p,
                coefficient_q=result.distances.coefficient_q,
                root_q=result.distances.root_q,
            )
        )
    return rows
