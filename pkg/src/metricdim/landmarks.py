"""Landmark sets on the cycle: active positions, canonical labelling,
free threads, and the resolving-set predicates.

A landmark set activates the cycle positions whose hanging trees it
touches.  The canonical labelling relabels the cycle so that position 0
is active and the largest active index is as small as possible; every
configuration test is phrased in those coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .decomposition import Thread, UnicyclicDecomposition
from .graph_core import GraphInputError


class EmptyLandmarkSetError(ValueError):
    """A landmark analysis was requested for the empty set."""


def cycle_distance(i: int, j: int, length: int) -> int:
    """Hop distance between two positions around a cycle."""
    d = abs(i - j) % length
    return min(d, length - d)


def has_geodesic_triple(positions: Iterable[int], length: int) -> bool:
    """True when three distinct positions pairwise sum to a full tour.

    Such a triple leaves no room for two vertices (or edges) to agree
    on all distances, so any branch-resolving landmark set activating
    one resolves the whole graph.
    """
    pos = sorted(set(positions))
    for a, b, c in combinations(pos, 3):
        total = (
            cycle_distance(a, b, length)
            + cycle_distance(b, c, length)
            + cycle_distance(a, c, length)
        )
        if total == length:
            return True
    return False


@dataclass(frozen=True)
class CycleLabelling:
    """Rotation/reflection mapping between original and canonical positions."""

    start: int
    direction: int
    length: int

    def to_canonical(self, position: int) -> int:
        return ((position - self.start) * self.direction) % self.length

    def to_original(self, index: int) -> int:
        return (self.start + self.direction * index) % self.length


def minimal_labellings(active_positions: Iterable[int], length: int) -> tuple[CycleLabelling, ...]:
    """All labellings starting at an active position that minimize the span.

    Ties are ordered by smallest original start, then forward direction,
    so the first entry is the canonical choice.
    """
    active = sorted(set(active_positions))
    if not active:
        raise EmptyLandmarkSetError("no active positions to label from")
    scored = []
    for start in active:
        for direction in (1, -1):
            lab = CycleLabelling(start=start, direction=direction, length=length)
            span = max(lab.to_canonical(p) for p in active)
            scored.append((span, start, 0 if direction == 1 else 1, lab))
    best = min(s[0] for s in scored)
    return tuple(lab for span, _, _, lab in sorted(scored, key=lambda s: s[:3]) if span == best)


@dataclass(frozen=True)
class LandmarkContext:
    """One landmark set viewed through its canonical cycle labelling.

    ``active`` holds canonical positions, ``max_active_index`` their
    maximum, and ``free_threads`` maps each canonical position to the
    landmark-free threads anchored at that cycle vertex.
    """

    decomposition: UnicyclicDecomposition
    landmarks: frozenset[int]
    labelling: CycleLabelling
    active: frozenset[int]
    max_active_index: int
    free_threads: dict[int, tuple[Thread, ...]]

    @property
    def cycle_length(self) -> int:
        return self.decomposition.cycle.length

    @property
    def active_count(self) -> int:
        return len(self.active)

    def cycle_vertex(self, index: int) -> int:
        """Vertex id sitting at a canonical cycle position."""
        return self.decomposition.cycle.vertices[self.labelling.to_original(index)]

    def free_threads_at(self, index: int) -> tuple[Thread, ...]:
        return self.free_threads.get(index, ())

    def has_active_geodesic_triple(self) -> bool:
        return has_geodesic_triple(self.active, self.cycle_length)


def _checked_landmarks(decomp: UnicyclicDecomposition, landmarks: Iterable[int]) -> frozenset[int]:
    out = frozenset(landmarks)
    if not out:
        raise EmptyLandmarkSetError("landmark set is empty")
    for v in out:
        if not 0 <= v < decomp.graph.n:
            raise GraphInputError(f"unknown vertex id {v}")
    return out


def _context_for(
    decomp: UnicyclicDecomposition,
    landmarks: frozenset[int],
    labelling: CycleLabelling,
    active_original: frozenset[int],
) -> LandmarkContext:
    active = frozenset(labelling.to_canonical(p) for p in active_original)
    free: dict[int, tuple[Thread, ...]] = {}
    for i, v in enumerate(decomp.cycle.vertices):
        threads = decomp.threads_at.get(v, ())
        if not threads:
            continue
        uncovered = tuple(t for t in threads if landmarks.isdisjoint(t.vertices))
        if uncovered:
            free[labelling.to_canonical(i)] = uncovered
    return LandmarkContext(
        decomposition=decomp,
        landmarks=landmarks,
        labelling=labelling,
        active=active,
        max_active_index=max(active),
        free_threads=free,
    )


def build_context(decomp: UnicyclicDecomposition, landmarks: Iterable[int]) -> LandmarkContext:
    """Canonical view of a landmark set; ties broken deterministically."""
    lset = _checked_landmarks(decomp, landmarks)
    active_original = frozenset(decomp.tree_of[v] for v in lset)
    labelling = minimal_labellings(active_original, decomp.cycle.length)[0]
    return _context_for(decomp, lset, labelling, active_original)


def build_all_minimal_contexts(
    decomp: UnicyclicDecomposition, landmarks: Iterable[int]
) -> tuple[LandmarkContext, ...]:
    """One context per span-minimizing labelling, for invariance checks."""
    lset = _checked_landmarks(decomp, landmarks)
    active_original = frozenset(decomp.tree_of[v] for v in lset)
    return tuple(
        _context_for(decomp, lset, lab, active_original)
        for lab in minimal_labellings(active_original, decomp.cycle.length)
    )


def is_branch_resolving(decomp: UnicyclicDecomposition, landmarks: Iterable[int]) -> bool:
    """At every anchor, all threads except at most one carry a landmark."""
    lset = frozenset(landmarks)
    for threads in decomp.threads_at.values():
        uncovered = sum(1 for t in threads if lset.isdisjoint(t.vertices))
        if uncovered > 1:
            return False
    return True
