"""Graph representation, input parsing, and breadth-first distances.

Vertices are dense integers ``0..n-1``.  All graphs here are simple,
undirected and connected; the analyses in this package additionally
require exactly one cycle, which :func:`validate_unicyclic` checks and
extracts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

Edge = tuple[int, int]
DistanceMatrix = tuple[tuple[int, ...], ...]


class GraphInputError(ValueError):
    """Malformed, inconsistent, or disconnected input."""


class NotUnicyclicError(GraphInputError):
    """The graph does not contain exactly one cycle."""


class TreeInputError(NotUnicyclicError):
    """The graph is a tree: no cycle at all."""


class MultiCycleError(NotUnicyclicError):
    """The graph has more than one independent cycle."""


def normalized_edge(u: int, v: int) -> Edge:
    """Return the endpoints as an ordered pair."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph over vertices ``0..n-1``."""

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "Graph":
        """Build and validate a graph from an iterable of vertex pairs.

        Raises :class:`GraphInputError` on self-loops, duplicate edges,
        non-dense vertex ids, or a disconnected result.
        """
        seen: set[Edge] = set()
        for u, v in edges:
            if u < 0 or v < 0:
                raise GraphInputError(f"negative vertex id in edge ({u}, {v})")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            e = normalized_edge(u, v)
            if e in seen:
                raise GraphInputError(f"duplicate edge {e}")
            seen.add(e)
        if not seen:
            raise GraphInputError("graph has no edges")
        n = 1 + max(v for e in seen for v in e)
        mentioned = {v for e in seen for v in e}
        if len(mentioned) != n:
            missing = min(set(range(n)) - mentioned)
            raise GraphInputError(
                f"vertex ids are not dense: {missing} unused but {n - 1} present"
            )
        adj: list[list[int]] = [[] for _ in range(n)]
        ordered = tuple(sorted(seen))
        for u, v in ordered:
            adj[u].append(v)
            adj[v].append(u)
        graph = cls(n=n, edges=ordered, adjacency=tuple(tuple(sorted(a)) for a in adj))
        reached = graph._bfs_row(0)
        unreached = sum(1 for d in reached if d < 0)
        if unreached:
            raise GraphInputError(
                f"graph is disconnected: {unreached} of {n} vertices unreachable from 0"
            )
        return graph

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def _bfs_row(self, source: int) -> list[int]:
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist


@dataclass(frozen=True)
class CycleInfo:
    """The unique cycle of a unicyclic graph.

    ``vertices`` lists the cycle in walk order starting from its
    smallest vertex id, toward that vertex's smaller cycle neighbour.
    ``index_of[v]`` is the cycle position of ``v``, or -1 off the cycle.
    """

    vertices: tuple[int, ...]
    on_cycle: tuple[bool, ...]
    index_of: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines into a graph.

    Blank lines and lines starting with ``#`` are skipped.
    """
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"line {lineno}: expected 'u v', got {raw!r}") from None
        edges.append((u, v))
    if not edges:
        raise GraphInputError("no edges in input")
    return Graph.from_edges(edges)


def validate_unicyclic(graph: Graph) -> CycleInfo:
    """Check that the graph has exactly one cycle and return it.

    A connected graph is unicyclic exactly when it has as many edges as
    vertices.  The cycle is found by repeatedly stripping degree-1
    vertices; whatever survives is the cycle.
    """
    n, m = graph.n, graph.m
    if m == n - 1:
        raise TreeInputError("not unicyclic: tree (edge count is n-1)")
    if m > n:
        raise MultiCycleError(f"not unicyclic: {m} edges on {n} vertices")

    degree = [graph.degree(v) for v in range(n)]
    alive = [True] * n
    queue = deque(v for v in range(n) if degree[v] == 1)
    while queue:
        v = queue.popleft()
        alive[v] = False
        for w in graph.adjacency[v]:
            if alive[w]:
                degree[w] -= 1
                if degree[w] == 1:
                    queue.append(w)

    start = min(v for v in range(n) if alive[v])
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = min(w for w in graph.adjacency[cur] if alive[w] and w != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    if len(order) != sum(alive) or len(order) < 3:
        raise RuntimeError("cycle extraction failed on a validated unicyclic graph")

    index_of = [-1] * n
    for i, v in enumerate(order):
        index_of[v] = i
    return CycleInfo(
        vertices=tuple(order),
        on_cycle=tuple(x >= 0 for x in index_of),
        index_of=tuple(index_of),
    )


def all_pairs_distances(graph: Graph) -> DistanceMatrix:
    """All-pairs shortest path lengths by BFS from every vertex."""
    return tuple(tuple(graph._bfs_row(s)) for s in range(graph.n))


def vertex_edge_distance(dist: DistanceMatrix, edge: Edge, s: int) -> int:
    """Distance from an edge to a vertex: the nearer endpoint counts."""
    u, v = edge
    return min(dist[u][s], dist[v][s])
