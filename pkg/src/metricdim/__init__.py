"""Exact vertex and edge metric dimensions of unicyclic graphs.

The structural pipeline runs in polynomial time: decompose the graph
around its unique cycle, enumerate the smallest biactive
branch-resolving landmark sets, and test each for the five blocking
configurations. A brute-force oracle is included for validation.
"""

from __future__ import annotations

from .configurations import (
    AntipodalActives,
    ConfigurationReport,
    FreeThreadAt,
    NoConfigurationError,
    PairedFreeThreads,
    ReflectedThread,
    detect_config_a,
    detect_config_b,
    detect_config_c,
    detect_config_d,
    detect_config_e,
    detect_configurations,
    edge_witness,
    vertex_witness,
)
from .corpus import (
    MAX_ENUMERATION_N,
    EnumerationBoundError,
    canonical_key,
    corona,
    cycle_graph,
    enumerate_unicyclic,
    fixtures,
    random_unicyclic,
    to_edge_list,
)
from .decomposition import Thread, UnicyclicDecomposition, decompose, threads_at_cycle_vertex
from .dimension import (
    DimensionResult,
    abc_status,
    ade_status,
    analyze,
    compute_dimensions,
    difference_class,
    edge_dimension,
    enumerate_smallest_biactive_sets,
    vertex_dimension,
)
from .graph_core import (
    CycleInfo,
    Graph,
    GraphInputError,
    MultiCycleError,
    NotUnicyclicError,
    TreeInputError,
    all_pairs_distances,
    parse_edge_list,
    validate_unicyclic,
    vertex_edge_distance,
)
from .landmarks import (
    CycleLabelling,
    EmptyLandmarkSetError,
    LandmarkContext,
    build_context,
    cycle_distance,
    has_geodesic_triple,
    is_branch_resolving,
)
from .oracle import (
    OracleReport,
    SizeCapExceededError,
    brute_force_dim,
    brute_force_edim,
    is_edge_generator,
    is_vertex_generator,
)

__version__ = "0.1.0"

__all__ = [
    "AntipodalActives",
    "ConfigurationReport",
    "CycleInfo",
    "CycleLabelling",
    "DimensionResult",
    "EmptyLandmarkSetError",
    "EnumerationBoundError",
    "FreeThreadAt",
    "Graph",
    "GraphInputError",
    "LandmarkContext",
    "MAX_ENUMERATION_N",
    "MultiCycleError",
    "NoConfigurationError",
    "NotUnicyclicError",
    "OracleReport",
    "PairedFreeThreads",
    "ReflectedThread",
    "SizeCapExceededError",
    "Thread",
    "TreeInputError",
    "UnicyclicDecomposition",
    "abc_status",
    "ade_status",
    "all_pairs_distances",
    "analyze",
    "brute_force_dim",
    "brute_force_edim",
    "build_context",
    "canonical_key",
    "compute_dimensions",
    "corona",
    "cycle_distance",
    "cycle_graph",
    "decompose",
    "detect_config_a",
    "detect_config_b",
    "detect_config_c",
    "detect_config_d",
    "detect_config_e",
    "detect_configurations",
    "difference_class",
    "edge_dimension",
    "edge_witness",
    "enumerate_smallest_biactive_sets",
    "enumerate_unicyclic",
    "fixtures",
    "has_geodesic_triple",
    "is_branch_resolving",
    "is_edge_generator",
    "is_vertex_generator",
    "parse_edge_list",
    "random_unicyclic",
    "threads_at_cycle_vertex",
    "to_edge_list",
    "validate_unicyclic",
    "vertex_dimension",
    "vertex_edge_distance",
    "vertex_witness",
]
