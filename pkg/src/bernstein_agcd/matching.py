"""Root pairing across two polynomials as bipartite maximum matching.

Clusters from both root lists form the two sides of a graph whose edges
connect clusters within a distance threshold; a maximum matching pairs each
cluster with at most one partner. The matched differences also define a
semi-metric between root lists.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .bernstein import NormSpec, weighted_norm
from .clustering import RootCluster

__all__ = ["RootGraph", "Matching", "build_root_graph", "hopcroft_karp", "root_semimetric"]

_INF = -1  # BFS layer marker for "unreached"


@dataclass(frozen=True, eq=False)
class RootGraph:
    """Bipartite graph over two cluster lists.

    Each edge is (left index, right index, capacity) with capacity the
    minimum of the two multiplicities.
    """

    left: list[RootCluster]
    right: list[RootCluster]
    edges: list[tuple[int, int, int]]
    threshold: float


@dataclass(frozen=True, eq=False)
class Matching:
    """Maximum matching: disjoint (left, right) pairs with their capacities."""

    pairs: list[tuple[int, int]]
    multiplicities: list[int]

    def __len__(self) -> int:
        return len(self.pairs)


def build_root_graph(
    left: Sequence[RootCluster],
    right: Sequence[RootCluster],
    sigma: float,
    edge_factor: float = 2.0,
) -> RootGraph:
    """Insert edge (i, j) iff |center_i - center_j| <= edge_factor * sigma."""
    if len(left) == 0 or len(right) == 0:
        raise ValueError("nothing to match: empty cluster list")
    if not sigma > 0:
        raise ValueError("sigma must be > 0")
    if not edge_factor > 0:
        raise ValueError("edge_factor must be > 0")
    threshold = edge_factor * sigma
    edges = []
    for i, u in enumerate(left):
        for j, v in enumerate(right):
            if abs(u.center - v.center) <= threshold:
                edges.append((i, j, min(u.multiplicity, v.multiplicity)))
    return RootGraph(left=list(left), right=list(right), edges=edges, threshold=threshold)


def hopcroft_karp(g: RootGraph) -> Matching:
    """Maximum-cardinality matching by BFS layering and DFS augmentation.

    Each phase finds a maximal set of shortest augmenting paths, giving
    O((m+n) sqrt(n)) overall. Ties between equal-cardinality matchings are
    broken by the deterministic ascending-index scan order. Matched pairs
    carry their edge capacities.
    """
    n_left = len(g.left)
    adjacency: list[list[int]] = [[] for _ in range(n_left)]
    capacity: dict[tuple[int, int], int] = {}
    for i, j, cap in sorted(g.edges):
        adjacency[i].append(j)
        capacity[(i, j)] = cap

    match_left: dict[int, int] = {}
    match_right: dict[int, int] = {}
    layer: list[int] = [_INF] * n_left

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(n_left):
            if u not in match_left:
                layer[u] = 0
                queue.append(u)
            else:
                layer[u] = _INF
        found_free = False
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                w = match_right.get(v)
                if w is None:
                    found_free = True
                elif layer[w] == _INF:
                    layer[w] = layer[u] + 1
                    queue.append(w)
        return found_free

    def dfs(u: int) -> bool:
        for v in adjacency[u]:
            w = match_right.get(v)
            if w is None or (layer[w] == layer[u] + 1 and dfs(w)):
                match_left[u] = v
                match_right[v] = u
                return True
        layer[u] = _INF
        return False

    while bfs():
        for u in range(n_left):
            if u not in match_left:
                dfs(u)

    pairs = sorted(match_left.items())
    return Matching(pairs=pairs, multiplicities=[capacity[p] for p in pairs])


def root_semimetric(
    r_roots: Sequence[complex],
    t_roots: Sequence[complex],
    assignment: Sequence[tuple[int, int]],
    spec: NormSpec = NormSpec(),
) -> float:
    """Weighted norm of the matched-root differences r[i] - t[j].

    ``assignment`` pairs indices of the two lists; each index may appear at
    most once per side. Unmatched roots contribute nothing.
    """
    seen_r: set[int] = set()
    seen_t: set[int] = set()
    diffs = []
    for i, j in assignment:
        if i in seen_r or j in seen_t:
            raise ValueError(f"assignment repeats an index: ({i}, {j})")
        seen_r.add(i)
        seen_t.add(j)
        diffs.append(complex(r_roots[i]) - complex(t_roots[j]))
    return weighted_norm(diffs, spec)
