"""Test-graph generators: parametric families, named fixtures, seeded
random graphs, and exhaustive enumeration up to isomorphism.

The isomorphism key exploits the structure directly: any isomorphism
between unicyclic graphs maps cycle to cycle, so a graph is determined
by the multiset of rooted hanging trees read around the cycle, up to
rotation and reflection.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Iterator

from .graph_core import Graph, GraphInputError, validate_unicyclic

MAX_ENUMERATION_N = 11


class EnumerationBoundError(ValueError):
    """Requested enumeration size is outside the supported range."""


def cycle_graph(n: int) -> Graph:
    """Plain cycle on ``n >= 3`` vertices."""
    if n < 3:
        raise GraphInputError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges((i, (i + 1) % n) for i in range(n))


def corona(n: int) -> Graph:
    """Cycle on ``n`` vertices with one pendant leaf per cycle vertex.

    Vertex ``n + i`` is the leaf attached to cycle vertex ``i``.
    """
    if n < 3:
        raise GraphInputError(f"a corona needs a cycle of at least 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.extend((i, n + i) for i in range(n))
    return Graph.from_edges(edges)


def fixtures() -> dict[str, Graph]:
    """Named graphs used across the tests.

    TWINLEAF6: two leaf pairs on opposite vertices of a hexagon.
    INTBR6: hexagon with two off-cycle branching vertices.
    C4LL: square with leaves on opposite corners.
    PENT3: pentagon with leaves on three consecutive vertices.
    """
    hexagon = [(i, (i + 1) % 6) for i in range(6)]
    return {
        "CYC3": cycle_graph(3),
        "CYC4": cycle_graph(4),
        "CYC5": cycle_graph(5),
        "CYC6": cycle_graph(6),
        "CYC7": cycle_graph(7),
        "CYC8": cycle_graph(8),
        "CORONA6": corona(6),
        "CORONA7": corona(7),
        "TWINLEAF6": Graph.from_edges(hexagon + [(0, 6), (0, 7), (3, 8), (3, 9)]),
        "INTBR6": Graph.from_edges(
            hexagon + [(0, 6), (6, 7), (6, 8), (2, 9), (9, 10), (9, 11)]
        ),
        "C4LL": Graph.from_edges([(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 5)]),
        "PENT3": Graph.from_edges(
            [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (1, 6), (2, 7)]
        ),
    }


def random_unicyclic(n: int, cycle_length: int, seed: int) -> Graph:
    """Seeded random unicyclic graph: a cycle plus a random forest.

    Each of the ``n - cycle_length`` remaining vertices attaches to a
    uniformly random existing vertex.  Deterministic per seed.
    """
    if cycle_length < 3 or cycle_length > n:
        raise GraphInputError(
            f"need 3 <= cycle_length <= n, got cycle_length={cycle_length}, n={n}"
        )
    rng = random.Random(seed)
    edges = [(i, (i + 1) % cycle_length) for i in range(cycle_length)]
    for v in range(cycle_length, n):
        edges.append((rng.randrange(v), v))
    return Graph.from_edges(edges)


def _rooted_tree_encoding(graph: Graph, root: int, members: frozenset[int]) -> str:
    """Canonical bracket string of a hanging tree rooted at its cycle vertex."""
    parent = {root: -1}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in graph.adjacency[v]:
            if w in members and w not in parent:
                parent[w] = v
                order.append(w)
                queue.append(w)
    encoding: dict[int, str] = {}
    for v in reversed(order):
        children = sorted(encoding[w] for w in graph.adjacency[v] if parent.get(w) == v)
        encoding[v] = "(" + "".join(children) + ")"
    return encoding[root]


def canonical_key(graph: Graph) -> tuple[int, tuple[str, ...]]:
    """Isomorphism-invariant key for a unicyclic graph.

    The sequence of rooted-tree encodings around the cycle, minimized
    over rotations and reflections, together with the cycle length.
    """
    cycle = validate_unicyclic(graph)
    g = cycle.length
    member_of: list[set[int]] = [set() for _ in range(g)]
    seen = {}
    for i, v in enumerate(cycle.vertices):
        seen[v] = i
        member_of[i].add(v)
    queue = deque(cycle.vertices)
    while queue:
        v = queue.popleft()
        for w in graph.adjacency[v]:
            if w not in seen:
                seen[w] = seen[v]
                member_of[seen[v]].add(w)
                queue.append(w)
    sequence = tuple(
        _rooted_tree_encoding(graph, cycle.vertices[i], frozenset(member_of[i]))
        for i in range(g)
    )
    best = min(
        tuple(sequence[(start + direction * t) % g] for t in range(g))
        for start in range(g)
        for direction in (1, -1)
    )
    return (g, best)


def _with_extra_leaf(graph: Graph, attach_to: int) -> Graph:
    return Graph.from_edges(list(graph.edges) + [(attach_to, graph.n)])


def enumerate_unicyclic(max_n: int) -> Iterator[Graph]:
    """One representative per isomorphism class, 3..max_n vertices.

    Grows each cycle by repeatedly attaching a leaf anywhere and
    deduplicating; every unicyclic graph arises this way because
    deleting any pendant vertex keeps the cycle intact.  Output is
    ordered by vertex count, then cycle length, then canonical key.
    """
    if not 3 <= max_n <= MAX_ENUMERATION_N:
        raise EnumerationBoundError(
            f"enumeration supports 3..{MAX_ENUMERATION_N} vertices, got {max_n}"
        )
    return _enumerate_unicyclic(max_n)


def _enumerate_unicyclic(max_n: int) -> Iterator[Graph]:
    per_cycle_length: dict[int, dict[tuple, Graph]] = {}
    for n in range(3, max_n + 1):
        batch: list[tuple[tuple, Graph]] = []
        for g in range(3, n + 1):
            if g == n:
                fresh = cycle_graph(g)
                current = {canonical_key(fresh): fresh}
            else:
                current = {}
                for parent in per_cycle_length[g].values():
                    for v in range(parent.n):
                        child = _with_extra_leaf(parent, v)
                        key = canonical_key(child)
                        if key not in current:
                            current[key] = child
            per_cycle_length[g] = current
            batch.extend(sorted(current.items()))
        for _, graph in batch:
            yield graph


def to_edge_list(graph: Graph) -> str:
    """Serialize as ``u v`` lines, the format :func:`parse_edge_list` reads."""
    return "".join(f"{u} {v}\n" for u, v in graph.edges)
