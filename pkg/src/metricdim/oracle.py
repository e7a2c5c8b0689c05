"""Brute-force ground truth for generators and both dimensions.

Independent of the structural machinery: only distance matrices and
subset search.  The optional pruning shortcut does lean on the
decomposition, and exists precisely so tests can validate it against
the unpruned path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .decomposition import decompose
from .graph_core import (
    DistanceMatrix,
    Edge,
    Graph,
    all_pairs_distances,
    validate_unicyclic,
    vertex_edge_distance,
)
from .landmarks import is_branch_resolving


class SizeCapExceededError(ValueError):
    """The graph is too large for exhaustive subset search."""


@dataclass(frozen=True)
class OracleReport:
    value: int
    witness_generator: frozenset[int]
    checked_subsets: int


def _smallest_colliding_pair(items: Sequence, vectors: Iterable[tuple]) -> tuple | None:
    groups: dict[tuple, list] = {}
    for item, vec in zip(items, vectors):
        groups.setdefault(vec, []).append(item)
    collisions = [tuple(members[:2]) for members in groups.values() if len(members) > 1]
    return min(collisions) if collisions else None


def is_vertex_generator(
    dist: DistanceMatrix, landmarks: Iterable[int]
) -> tuple[bool, tuple[int, int] | None]:
    """Check that all vertices get distinct distance vectors.

    Returns ``(True, None)`` or ``(False, pair)`` with the
    lexicographically smallest colliding vertex pair.
    """
    order = sorted(set(landmarks))
    if not order:
        raise ValueError("empty landmark set")
    vertices = range(len(dist))
    vectors = (tuple(dist[v][s] for s in order) for v in vertices)
    pair = _smallest_colliding_pair(vertices, vectors)
    return (pair is None, pair)


def is_edge_generator(
    dist: DistanceMatrix, edges: Sequence[Edge], landmarks: Iterable[int]
) -> tuple[bool, tuple[Edge, Edge] | None]:
    """Edge analogue of :func:`is_vertex_generator`."""
    order = sorted(set(landmarks))
    if not order:
        raise ValueError("empty landmark set")
    items = sorted(tuple(sorted(e)) for e in edges)
    vectors = (tuple(vertex_edge_distance(dist, e, s) for s in order) for e in items)
    pair = _smallest_colliding_pair(items, vectors)
    return (pair is None, pair)


def _search(
    graph: Graph,
    predicate: Callable[[tuple[int, ...]], bool],
    size_cap: int,
    prune: bool,
) -> OracleReport:
    if graph.n > size_cap:
        raise SizeCapExceededError(
            f"{graph.n} vertices exceeds the search cap of {size_cap}"
        )
    min_size = 1
    decomp = None
    if prune:
        decomp = decompose(graph, validate_unicyclic(graph))
        # No generator can be smaller than the smallest biactive
        # branch-resolving set, and at that exact size nothing else
        # needs checking.
        min_size = decomp.min_branch_resolving + max(0, 2 - decomp.branch_active_count)
    checked = 0
    for size in range(min_size, graph.n + 1):
        for subset in combinations(range(graph.n), size):
            if prune and size == min_size:
                if len({decomp.tree_of[v] for v in subset}) < 2:
                    continue
                if not is_branch_resolving(decomp, subset):
                    continue
            checked += 1
            if predicate(subset):
                return OracleReport(
                    value=size, witness_generator=frozenset(subset), checked_subsets=checked
                )
    raise RuntimeError("subset search exhausted without finding a generator")


def brute_force_dim(graph: Graph, *, size_cap: int = 16, prune: bool = False) -> OracleReport:
    """Smallest vertex metric generator by size-ordered subset search."""
    dist = all_pairs_distances(graph)
    return _search(graph, lambda s: is_vertex_generator(dist, s)[0], size_cap, prune)


def brute_force_edim(graph: Graph, *, size_cap: int = 16, prune: bool = False) -> OracleReport:
    """Smallest edge metric generator by size-ordered subset search."""
    dist = all_pairs_distances(graph)
    edges = graph.edges
    return _search(graph, lambda s: is_edge_generator(dist, edges, s)[0], size_cap, prune)
