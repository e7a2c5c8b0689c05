"""The five blocking configurations and their witness pairs.

A biactive branch-resolving landmark set fails to be a vertex metric
generator exactly when one of the configurations A, B, C is present in
canonical coordinates, and fails to be an edge metric generator exactly
when one of A, D, E is present.  Each detection carries enough data to
build a concrete pair of vertices (or edges) that the landmarks cannot
tell apart.

Throughout, ``g`` below refers to the cycle length and ``k`` to the
largest canonical active index of the context under inspection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import Thread
from .graph_core import Edge, normalized_edge
from .landmarks import LandmarkContext


class NoConfigurationError(ValueError):
    """A witness was requested but no blocking configuration is present."""


@dataclass(frozen=True)
class AntipodalActives:
    """Configuration A: exactly two active positions, facing each other
    across an even cycle."""


@dataclass(frozen=True)
class FreeThreadAt:
    """Configurations B and D: a landmark-free thread anchored in a
    blocking arc of the cycle."""

    index: int
    thread: Thread


@dataclass(frozen=True)
class ReflectedThread:
    """Configuration C: a free thread long enough that one of its
    vertices mirrors a far-arc cycle vertex."""

    index: int
    thread: Thread
    mirror_index: int


@dataclass(frozen=True)
class PairedFreeThreads:
    """Configuration E: a free thread long enough that one of its edges
    mirrors the far arc; on even cycles a second free thread must hang
    at the mirrored position."""

    index: int
    thread: Thread
    mirror_index: int | None
    mirror_thread: Thread | None


@dataclass(frozen=True)
class ConfigurationReport:
    """Presence data for all five configurations plus witness pairs."""

    config_a: AntipodalActives | None
    config_b: FreeThreadAt | None
    config_c: ReflectedThread | None
    config_d: FreeThreadAt | None
    config_e: PairedFreeThreads | None
    vertex_witness: tuple[int, int] | None
    edge_witness: tuple[Edge, Edge] | None

    @property
    def blocks_vertex(self) -> bool:
        return (self.config_a or self.config_b or self.config_c) is not None

    @property
    def blocks_edge(self) -> bool:
        return (self.config_a or self.config_d or self.config_e) is not None

    def vertex_config_names(self) -> tuple[str, ...]:
        pairs = (("A", self.config_a), ("B", self.config_b), ("C", self.config_c))
        return tuple(name for name, cfg in pairs if cfg is not None)

    def edge_config_names(self) -> tuple[str, ...]:
        pairs = (("A", self.config_a), ("D", self.config_d), ("E", self.config_e))
        return tuple(name for name, cfg in pairs if cfg is not None)


def _blocking_arc(k: int, g: int, *, widened: bool) -> list[int]:
    """Canonical positions whose free threads block resolution.

    The narrow form (configuration B) runs from k up to just before the
    midpoint and resumes past the mirrored active window; the widened
    form (configuration D) extends one step further on each side of an
    odd cycle.  Position 0 always belongs to the arc.
    """
    if widened:
        left = range(k, (g + 1) // 2)
        right = range(g // 2 + k + 1, g)
    else:
        left = range(k, g // 2)
        right = range((g + 1) // 2 + k + 1, g)
    return sorted({0, *left, *right})


def detect_config_a(ctx: LandmarkContext) -> AntipodalActives | None:
    g = ctx.cycle_length
    if ctx.active_count == 2 and g % 2 == 0 and ctx.max_active_index == g // 2:
        return AntipodalActives()
    return None


def detect_config_b(ctx: LandmarkContext) -> FreeThreadAt | None:
    g, k = ctx.cycle_length, ctx.max_active_index
    if k > g // 2 - 1:
        return None
    for i in _blocking_arc(k, g, widened=False):
        threads = ctx.free_threads_at(i)
        if threads:
            return FreeThreadAt(index=i, thread=threads[0])
    return None


def detect_config_c(ctx: LandmarkContext) -> ReflectedThread | None:
    g, k = ctx.cycle_length, ctx.max_active_index
    if ctx.active_count != 2 or g % 2:
        return None
    needed = g // 2 - k
    # with k = g/2 the bound degenerates to zero and A already applies;
    # calling that C would make detection depend on the labelling choice
    if needed < 1:
        return None
    for i in range(k + 1):
        for thread in ctx.free_threads_at(i):
            if thread.length >= needed:
                return ReflectedThread(index=i, thread=thread, mirror_index=(g // 2 + k - i) % g)
    return None


def detect_config_d(ctx: LandmarkContext) -> FreeThreadAt | None:
    g, k = ctx.cycle_length, ctx.max_active_index
    if k > (g + 1) // 2 - 1:
        return None
    for i in _blocking_arc(k, g, widened=True):
        threads = ctx.free_threads_at(i)
        if threads:
            return FreeThreadAt(index=i, thread=threads[0])
    return None


def detect_config_e(ctx: LandmarkContext) -> PairedFreeThreads | None:
    g, k = ctx.cycle_length, ctx.max_active_index
    if ctx.active_count != 2:
        return None
    needed = g // 2 - k + 1
    for i in range(k + 1):
        for thread in ctx.free_threads_at(i):
            if thread.length < needed:
                continue
            if g % 2:
                return PairedFreeThreads(
                    index=i, thread=thread, mirror_index=None, mirror_thread=None
                )
            j = (g // 2 + k - i) % g
            for partner in ctx.free_threads_at(j):
                # The mirrored thread must be a thread of its own, which
                # only matters when j wraps back onto i.
                if partner is not thread:
                    return PairedFreeThreads(
                        index=i, thread=thread, mirror_index=j, mirror_thread=partner
                    )
    return None


def _build_vertex_witness(
    ctx: LandmarkContext,
    a: AntipodalActives | None,
    b: FreeThreadAt | None,
    c: ReflectedThread | None,
) -> tuple[int, int]:
    g, k = ctx.cycle_length, ctx.max_active_index
    if a is not None:
        return (ctx.cycle_vertex(1), ctx.cycle_vertex(g - 1))
    if b is not None:
        first = b.thread.vertices[0]
        if k <= b.index <= g // 2 - 1:
            partner = ctx.cycle_vertex(b.index + 1)
        else:
            partner = ctx.cycle_vertex((b.index - 1) % g)
        return (first, partner)
    assert c is not None
    # A absent forces the active span strictly below g/2, so the probe
    # vertex sits at positive depth on the thread.
    depth = g // 2 - k
    return (c.thread.vertices[depth - 1], ctx.cycle_vertex(c.mirror_index))


def _build_edge_witness(
    ctx: LandmarkContext,
    a: AntipodalActives | None,
    d: FreeThreadAt | None,
    e: PairedFreeThreads | None,
) -> tuple[Edge, Edge]:
    g, k = ctx.cycle_length, ctx.max_active_index
    if a is not None:
        v0 = ctx.cycle_vertex(0)
        return (
            normalized_edge(v0, ctx.cycle_vertex(1)),
            normalized_edge(v0, ctx.cycle_vertex(g - 1)),
        )
    if d is not None:
        anchor = ctx.cycle_vertex(d.index)
        first = normalized_edge(d.thread.vertices[0], anchor)
        if k <= d.index <= (g + 1) // 2 - 1:
            partner = ctx.cycle_vertex((d.index + 1) % g)
        else:
            partner = ctx.cycle_vertex((d.index - 1) % g)
        return (first, normalized_edge(anchor, partner))
    assert e is not None
    depth = g // 2 - k
    verts = e.thread.vertices
    if depth == 0:
        probe = normalized_edge(ctx.cycle_vertex(e.index), verts[0])
    else:
        probe = normalized_edge(verts[depth - 1], verts[depth])
    if e.mirror_thread is not None:
        partner = normalized_edge(
            ctx.cycle_vertex(e.mirror_index), e.mirror_thread.vertices[0]
        )
    else:
        mirrored = g // 2 + k - e.index
        partner = normalized_edge(
            ctx.cycle_vertex(mirrored % g), ctx.cycle_vertex((mirrored + 1) % g)
        )
    return (probe, partner)


def detect_configurations(ctx: LandmarkContext) -> ConfigurationReport:
    """Run all five detections and attach witness pairs where possible."""
    a = detect_config_a(ctx)
    b = detect_config_b(ctx)
    c = detect_config_c(ctx)
    d = detect_config_d(ctx)
    e = detect_config_e(ctx)
    vertex_pair = _build_vertex_witness(ctx, a, b, c) if (a or b or c) else None
    edge_pair = _build_edge_witness(ctx, a, d, e) if (a or d or e) else None
    return ConfigurationReport(
        config_a=a,
        config_b=b,
        config_c=c,
        config_d=d,
        config_e=e,
        vertex_witness=vertex_pair,
        edge_witness=edge_pair,
    )


def vertex_witness(ctx: LandmarkContext, report: ConfigurationReport) -> tuple[int, int]:
    """A vertex pair the landmarks cannot distinguish.

    Built from configuration A when present, otherwise B, otherwise C.
    """
    if not report.blocks_vertex:
        raise NoConfigurationError("no vertex-blocking configuration present")
    return _build_vertex_witness(ctx, report.config_a, report.config_b, report.config_c)


def edge_witness(ctx: LandmarkContext, report: ConfigurationReport) -> tuple[Edge, Edge]:
    """An edge pair the landmarks cannot distinguish (A, then D, then E)."""
    if not report.blocks_edge:
        raise NoConfigurationError("no edge-blocking configuration present")
    return _build_edge_witness(ctx, report.config_a, report.config_d, report.config_e)
