"""Group approximate roots into (center, multiplicity) clusters.

A numerical root of multiplicity m shows up as m nearby simple roots; the
greedy scan below replaces each such group with its mean and its size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = ["RootCluster", "cluster_roots"]


@dataclass(frozen=True)
class RootCluster:
    """Mean of a group of absorbed roots, counted with the group size."""

    center: complex
    multiplicity: int


def cluster_roots(roots: Sequence[complex], sigma: float) -> list[RootCluster]:
    """Greedy sequential absorption of roots within sigma of a scan pivot.

    Roots are pre-sorted by (real, imaginary) part for determinism, then
    scanned in order: each still-unconsumed root becomes a pivot and absorbs
    every later root within distance sigma OF THE PIVOT (not of each other),
    emitting (mean, count). Multiplicities sum to the input length. The
    greedy pivot rule is order-dependent; the pre-sort fixes one order
    independent of the eigensolver's.
    """
    if len(roots) == 0:
        raise ValueError("roots must be nonempty")
    if not sigma > 0:
        raise ValueError("sigma must be > 0")
    pending = sorted((complex(z) for z in roots), key=lambda z: (z.real, z.imag))
    clusters: list[RootCluster] = []
    while pending:
        pivot = pending[0]
        absorbed = [pivot]
        rest = []
        for z in pending[1:]:
            if abs(z - pivot) <= sigma:
                absorbed.append(z)
            else:
                rest.append(z)
        pending = rest
        clusters.append(
            RootCluster(center=sum(absorbed) / len(absorbed), multiplicity=len(absorbed))
        )
    return clusters
