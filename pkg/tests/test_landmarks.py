"""Canonical cycle labelling and landmark contexts."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from metricdim.corpus import corona, cycle_graph, enumerate_unicyclic, fixtures
from metricdim.decomposition import decompose
from metricdim.dimension import enumerate_smallest_biactive_sets
from metricdim.graph_core import GraphInputError, validate_unicyclic
from metricdim.landmarks import (
    EmptyLandmarkSetError,
    build_all_minimal_contexts,
    build_context,
    cycle_distance,
    has_geodesic_triple,
    is_branch_resolving,
    minimal_labellings,
)

from conftest import ref_is_branch_resolving


def _context(graph, landmarks):
    d = decompose(graph, validate_unicyclic(graph))
    return build_context(d, frozenset(landmarks))


def test_cycle_distance_wraps():
    assert cycle_distance(1, 5, 6) == 2
    assert cycle_distance(5, 1, 6) == 2
    assert cycle_distance(0, 3, 6) == 3
    assert cycle_distance(2, 2, 7) == 0


def test_geodesic_triple_detection():
    assert has_geodesic_triple({0, 2, 4}, 6)
    assert not has_geodesic_triple({0, 1, 2}, 6)
    assert has_geodesic_triple({0, 1, 3}, 6)
    assert not has_geodesic_triple({0, 3}, 6)
    # one triple inside a larger active set suffices
    assert has_geodesic_triple({0, 1, 2, 4}, 6)


def test_minimal_labelling_prefers_small_span_then_start():
    labellings = minimal_labellings(frozenset({0, 2}), 6)
    first = labellings[0]
    assert first.start == 0 and first.direction == 1
    assert first.to_canonical(2) == 2
    spans = {max(lab.to_canonical(p) for p in (0, 2)) for lab in labellings}
    assert spans == {2}


def test_labelling_round_trip():
    (lab, *_) = minimal_labellings(frozenset({3, 5}), 7)
    for p in range(7):
        assert lab.to_original(lab.to_canonical(p)) == p


def test_corona_context_active_positions():
    ctx = _context(corona(6), {6, 8})
    assert ctx.active == frozenset({0, 2})
    assert ctx.max_active_index == 2
    assert ctx.labelling.start == 0 and ctx.labelling.direction == 1
    assert ctx.cycle_vertex(2) == 2
    assert [t.vertices for t in ctx.free_threads_at(1)] == [(7,)]
    assert {i for i in range(6) if ctx.free_threads_at(i)} == {1, 3, 4, 5}
    assert ctx.free_threads_at(0) == ()
    assert not ctx.has_active_geodesic_triple()


def test_twinleaf_context_frees_one_thread_per_anchor(named_graphs):
    ctx = _context(named_graphs["TWINLEAF6"], {6, 8})
    assert [t.vertices for t in ctx.free_threads_at(0)] == [(7,)]
    assert [t.vertices for t in ctx.free_threads_at(3)] == [(9,)]


def test_single_landmark_context_is_not_biactive():
    ctx = _context(cycle_graph(6), {0})
    assert ctx.active_count == 1
    assert ctx.max_active_index == 0


def test_twinleaf_context_reaches_half_girth():
    ctx = _context(fixtures()["TWINLEAF6"], {6, 8})
    assert ctx.active == frozenset({0, 3})
    assert ctx.max_active_index == 3
    assert ctx.has_active_geodesic_triple() is False


def test_context_rejects_empty_and_unknown():
    g = corona(6)
    d = decompose(g, validate_unicyclic(g))
    with pytest.raises(EmptyLandmarkSetError):
        build_context(d, frozenset())
    with pytest.raises(GraphInputError, match="unknown vertex id 99"):
        build_context(d, frozenset({99}))


def test_branch_resolving_predicate(named_graphs):
    tw = named_graphs["TWINLEAF6"]
    d = decompose(tw, validate_unicyclic(tw))
    assert is_branch_resolving(d, frozenset({6, 8}))
    assert is_branch_resolving(d, frozenset({6, 9}))
    # both threads at vertex 0 left uncovered
    assert not is_branch_resolving(d, frozenset({8, 1}))
    assert not is_branch_resolving(d, frozenset({0, 3}))
    assert not is_branch_resolving(d, frozenset({0, 8}))
    cyc = cycle_graph(5)
    assert is_branch_resolving(decompose(cyc, validate_unicyclic(cyc)), frozenset({0}))


def test_branch_resolving_matches_reference(small_corpus):
    import random

    rng = random.Random(5)
    for g in small_corpus[::3]:
        d = decompose(g, validate_unicyclic(g))
        for _ in range(6):
            size = rng.randint(1, min(4, g.n))
            s = frozenset(rng.sample(range(g.n), size))
            assert is_branch_resolving(d, s) == ref_is_branch_resolving(g, s)


def test_all_minimal_contexts_share_span():
    ctxs = build_all_minimal_contexts(
        decompose(corona(6), validate_unicyclic(corona(6))), frozenset({6, 9})
    )
    spans = {c.max_active_index for c in ctxs}
    assert len(spans) == 1
    assert spans.pop() == 3


def test_no_triple_bounds_canonical_span(small_corpus):
    """Without a geodesic triple the active set fits in half the cycle."""
    for g in small_corpus:
        d = decompose(g, validate_unicyclic(g))
        for _, landmarks in enumerate_smallest_biactive_sets(d):
            ctx = build_context(d, landmarks)
            span = ctx.max_active_index
            if ctx.has_active_geodesic_triple():
                assert 2 * span >= ctx.cycle_length
            else:
                assert 2 * span <= ctx.cycle_length


@given(
    st.integers(min_value=3, max_value=12),
    st.data(),
)
def test_canonical_choice_is_rotation_invariant(g_len, data):
    """Rotating the active positions must not change the canonical span."""
    count = data.draw(st.integers(min_value=2, max_value=min(4, g_len)))
    active = frozenset(
        data.draw(
            st.lists(
                st.integers(min_value=0, max_value=g_len - 1),
                min_size=count,
                max_size=count,
                unique=True,
            )
        )
    )
    shift = data.draw(st.integers(min_value=0, max_value=g_len - 1))
    span = max(minimal_labellings(active, g_len)[0].to_canonical(p) for p in active)
    rotated = frozenset((p + shift) % g_len for p in active)
    rotated_span = max(
        minimal_labellings(rotated, g_len)[0].to_canonical(p) for p in rotated
    )
    assert span == rotated_span


def test_smallest_sets_activate_exactly_the_branch_active_positions(small_corpus):
    """With b >= 2 a smallest set has no landmarks to spare for new trees."""
    for g in small_corpus:
        d = decompose(g, validate_unicyclic(g))
        if d.branch_active_count < 2:
            continue
        for _, landmarks in enumerate_smallest_biactive_sets(d):
            active = frozenset(d.tree_of[v] for v in landmarks)
            assert active == d.branch_active


def test_config_presence_agrees_across_optimal_labellings(small_corpus):
    """Tie-breaking between canonical labellings cannot change detection."""
    from metricdim.configurations import detect_configurations

    def presence(report):
        return (
            report.config_a is not None,
            report.config_b is not None,
            report.config_c is not None,
            report.config_d is not None,
            report.config_e is not None,
        )

    for g in small_corpus:
        d = decompose(g, validate_unicyclic(g))
        for _, landmarks in enumerate_smallest_biactive_sets(d):
            seen = {
                presence(detect_configurations(ctx))
                for ctx in build_all_minimal_contexts(d, landmarks)
            }
            assert len(seen) == 1, (g.edges, landmarks)


def test_labelling_enumeration_covers_all_optima():
    active = frozenset({0, 3})
    labs = minimal_labellings(active, 6)
    # the antipodal pair admits four orientation choices at span 3
    assert len(labs) == 4
    for lab in labs:
        assert max(lab.to_canonical(p) for p in active) == 3
        assert lab.to_canonical(lab.start) == 0
