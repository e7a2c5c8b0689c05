"""Structural skeleton of a unicyclic graph.

Splits the graph into its cycle and the trees hanging from each cycle
vertex, enumerates pendant threads, and derives the two quantities the
dimension formulas are built from: the minimum branch-resolving set
size and the number of branch-active cycle positions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph_core import CycleInfo, Graph


@dataclass(frozen=True)
class Thread:
    """Pendant path hanging at a vertex of degree >= 3.

    ``vertices`` runs from the anchor's neighbour out to the degree-1
    tip.  The anchor itself is not part of the thread, so a landmark
    placed at the anchor covers none of its threads.
    """

    anchor: int
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def tip(self) -> int:
        return self.vertices[-1]


@dataclass(frozen=True)
class UnicyclicDecomposition:
    """Cycle, hanging trees, threads, and the derived landmark counts.

    ``tree_of[v]`` is the cycle position whose hanging tree contains
    ``v`` (cycle vertices belong to their own tree).  ``threads_at``
    maps every vertex of degree >= 3 that anchors at least one thread
    to its threads, ordered by (length, vertices).  ``thread_count``
    records the number of anchored threads for every vertex of degree
    >= 3, including zero.  ``min_branch_resolving`` is the size of a
    smallest branch-resolving set: the sum over all anchors of (thread
    count - 1) where the count exceeds one.
    """

    graph: Graph
    cycle: CycleInfo
    tree_of: tuple[int, ...]
    trees: tuple[tuple[int, ...], ...]
    threads_at: dict[int, tuple[Thread, ...]]
    thread_count: dict[int, int]
    branching: frozenset[int]
    branch_active: frozenset[int]
    min_branch_resolving: int

    @property
    def branch_active_count(self) -> int:
        return len(self.branch_active)


def decompose(graph: Graph, cycle: CycleInfo) -> UnicyclicDecomposition:
    """Compute the full structural decomposition."""
    n = graph.n
    g = cycle.length

    # Hanging trees: BFS from all cycle vertices at once.  Trees meet
    # the cycle in exactly one vertex, so no edge filter is needed.
    tree_of = [-1] * n
    queue = deque()
    for i, v in enumerate(cycle.vertices):
        tree_of[v] = i
        queue.append(v)
    while queue:
        v = queue.popleft()
        for w in graph.adjacency[v]:
            if tree_of[w] < 0:
                tree_of[w] = tree_of[v]
                queue.append(w)

    grouped: list[list[int]] = [[] for _ in range(g)]
    for v in range(n):
        grouped[tree_of[v]].append(v)

    # Each degree-1 vertex is the tip of exactly one thread: walk
    # through degree-2 vertices until a vertex of degree >= 3 appears.
    collected: dict[int, list[Thread]] = {}
    for tip in range(n):
        if graph.degree(tip) != 1:
            continue
        path = [tip]
        prev, cur = -1, tip
        while True:
            nxt = next(w for w in graph.adjacency[cur] if w != prev)
            if graph.degree(nxt) >= 3:
                anchor = nxt
                break
            path.append(nxt)
            prev, cur = cur, nxt
        collected.setdefault(anchor, []).append(Thread(anchor, tuple(reversed(path))))

    threads_at = {
        anchor: tuple(sorted(ts, key=lambda t: (t.length, t.vertices)))
        for anchor, ts in collected.items()
    }
    thread_count = {v: 0 for v in range(n) if graph.degree(v) >= 3}
    for anchor, ts in threads_at.items():
        thread_count[anchor] = len(ts)

    branching = frozenset(
        v
        for v in range(n)
        if graph.degree(v) >= (4 if cycle.on_cycle[v] else 3)
    )
    branch_active = frozenset(
        i for i in range(g) if any(v in branching for v in grouped[i])
    )
    min_branch_resolving = sum(c - 1 for c in thread_count.values() if c > 1)

    return UnicyclicDecomposition(
        graph=graph,
        cycle=cycle,
        tree_of=tuple(tree_of),
        trees=tuple(tuple(sorted(vs)) for vs in grouped),
        threads_at=threads_at,
        thread_count=thread_count,
        branching=branching,
        branch_active=branch_active,
        min_branch_resolving=min_branch_resolving,
    )


def threads_at_cycle_vertex(decomp: UnicyclicDecomposition, index: int) -> tuple[Thread, ...]:
    """Threads anchored directly at the cycle vertex in this position.

    Empty when the hanging tree is trivial or branches internally
    before any pendant path reaches the cycle.
    """
    return decomp.threads_at.get(decomp.cycle.vertices[index], ())
