"""Approximate GCD of univariate polynomials in Bernstein bases."""

from .bernstein import (
    BernsteinPoly,
    NormSpec,
    basis_values,
    bernstein_multiply,
    coefficient_distance,
    differentiation_matrix,
    eval_decasteljau,
    poly_from_roots,
    weighted_norm,
)
from .clustering import RootCluster, cluster_roots
from .matching import Matching, RootGraph, build_root_graph, hopcroft_karp, root_semimetric
from .pencil import (
    CompanionPencil,
    RootList,
    RootOptions,
    build_companion_pencil,
    generalized_eigenvalues,
    roots,
)
from .pipeline import AgcdDistances, AgcdOptions, AgcdResult, agcd
from .reconstruction import (
    PerturbationSystem,
    approximate_polynomial,
    build_perturbation_system,
    solve_min_norm,
)

__version__ = "0.1.0"

__all__ = [
    "BernsteinPoly",
    "NormSpec",
    "basis_values",
    "bernstein_multiply",
    "coefficient_distance",
    "differentiation_matrix",
    "eval_decasteljau",
    "poly_from_roots",
    "weighted_norm",
    "RootCluster",
    "cluster_roots",
    "Matching",
    "RootGraph",
    "build_root_graph",
    "hopcroft_karp",
    "root_semimetric",
    "CompanionPencil",
    "RootList",
    "RootOptions",
    "build_companion_pencil",
    "generalized_eigenvalues",
    "roots",
    "AgcdDistances",
    "AgcdOptions",
    "AgcdResult",
    "agcd",
    "PerturbationSystem",
    "approximate_polynomial",
    "build_perturbation_system",
    "solve_min_norm",
    "__version__",
]
