"""Shared fixtures and definition-walking reference helpers.

The reference helpers recompute structural quantities directly from the
definitions, without reusing the decomposition module's traversal order,
so the two implementations can disagree.
"""

from __future__ import annotations

import pytest

from metricdim.corpus import corona, cycle_graph, enumerate_unicyclic, fixtures
from metricdim.graph_core import Graph, all_pairs_distances, validate_unicyclic


@pytest.fixture(scope="session")
def named_graphs() -> dict[str, Graph]:
    named = dict(fixtures())
    named["CORONA10"] = corona(10)
    named["CYC12"] = cycle_graph(12)
    return named


@pytest.fixture(scope="session")
def small_corpus() -> tuple[Graph, ...]:
    return tuple(enumerate_unicyclic(8))


def ref_cycle_vertices(graph: Graph) -> set[int]:
    """Cycle membership by repeated leaf removal."""
    degree = [len(graph.adjacency[v]) for v in range(graph.n)]
    alive = set(range(graph.n))
    queue = [v for v in alive if degree[v] == 1]
    while queue:
        v = queue.pop()
        alive.discard(v)
        for w in graph.adjacency[v]:
            if w in alive:
                degree[w] -= 1
                if degree[w] == 1:
                    queue.append(w)
    return alive


def ref_tree_assignment(graph: Graph) -> dict[int, int]:
    """Map each vertex to the cycle vertex whose hanging tree holds it."""
    on_cycle = ref_cycle_vertices(graph)
    assignment = {v: v for v in on_cycle}
    for root in on_cycle:
        stack = [(root, None)]
        while stack:
            v, parent = stack.pop()
            for w in graph.adjacency[v]:
                if w == parent or w in on_cycle:
                    continue
                assignment[w] = root
                stack.append((w, v))
    return assignment


def ref_threads(graph: Graph) -> dict[int, list[list[int]]]:
    """Threads keyed by anchor, each as the vertex list walking outward.

    A thread hangs off a vertex of degree at least three, runs through
    degree-two vertices, and ends at a leaf. The anchor is excluded.
    """
    found: dict[int, list[list[int]]] = {}
    for anchor in range(graph.n):
        if len(graph.adjacency[anchor]) < 3:
            continue
        for first in graph.adjacency[anchor]:
            if len(graph.adjacency[first]) > 2:
                continue
            path = [first]
            prev, cur = anchor, first
            while len(graph.adjacency[cur]) == 2:
                nxt = next(w for w in graph.adjacency[cur] if w != prev)
                if len(graph.adjacency[nxt]) != 2 and len(graph.adjacency[nxt]) != 1:
                    path = []
                    break
                path.append(nxt)
                prev, cur = cur, nxt
            if path and len(graph.adjacency[path[-1]]) == 1:
                found.setdefault(anchor, []).append(path)
    return found


def ref_branching_vertices(graph: Graph) -> set[int]:
    on_cycle = ref_cycle_vertices(graph)
    out = set()
    for v in range(graph.n):
        degree = len(graph.adjacency[v])
        if v in on_cycle:
            if degree >= 4:
                out.add(v)
        elif degree >= 3:
            out.add(v)
    return out


def ref_min_branch_resolving(graph: Graph) -> int:
    return sum(len(ts) - 1 for ts in ref_threads(graph).values() if len(ts) > 1)


def ref_branch_active_positions(graph: Graph) -> set[int]:
    """Cycle positions whose hanging tree contains a branching vertex.

    Positions are indices along the walk produced by validate_unicyclic,
    matching the convention used throughout the package.
    """
    cycle = validate_unicyclic(graph)
    assignment = ref_tree_assignment(graph)
    branching = ref_branching_vertices(graph)
    return {cycle.index_of[assignment[v]] for v in branching}


def ref_is_branch_resolving(graph: Graph, landmarks: frozenset[int]) -> bool:
    for ts in ref_threads(graph).values():
        uncovered = sum(1 for path in ts if not landmarks.intersection(path))
        if uncovered > 1:
            return False
    return True


def vertex_vector(graph: Graph, landmarks: frozenset[int], v: int) -> tuple[int, ...]:
    dist = all_pairs_distances(graph)
    return tuple(dist[v][s] for s in sorted(landmarks))


def edge_vector(graph: Graph, landmarks: frozenset[int], edge: tuple[int, int]) -> tuple[int, ...]:
    dist = all_pairs_distances(graph)
    u, w = edge
    return tuple(min(dist[u][s], dist[w][s]) for s in sorted(landmarks))
