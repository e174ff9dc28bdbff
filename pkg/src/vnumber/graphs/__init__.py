"""Graph-side invariants tied to the v-number of edge ideals."""

from .core import (
    Graph,
    Matching,
    complete,
    cycle,
    edge_ideal,
    octahedron,
    path,
    perfect_matchings,
    t10,
    two_triangles,
    whisker,
    whisker_matching,
)
from .invariants import (
    A_G,
    F_G,
    BasicInvariants,
    CoverageClass,
    CycleReport,
    FinbowClass,
    SheddingReport,
    basic_invariants,
    coverage_class,
    cycle_invariants,
    finbow_class,
    has_property_P,
    in_A_G,
    is_isomorphic,
    is_W2,
    is_well_covered,
    max_induced_matching,
    shedding_all,
    simplicial_vertices,
    v_graph,
)
from .witnesses import (
    WitnessPair,
    find_simplicial_partition,
    simplex_partition_witness,
    vwc_witness,
)

__all__ = [
    "A_G", "F_G", "BasicInvariants", "CoverageClass", "CycleReport", "FinbowClass", "Graph",
    "Matching", "SheddingReport", "WitnessPair", "basic_invariants", "complete", "coverage_class",
    "cycle", "cycle_invariants", "edge_ideal", "octahedron", "find_simplicial_partition",
    "finbow_class", "has_property_P", "in_A_G", "is_W2", "is_isomorphic", "is_well_covered",
    "max_induced_matching", "path", "perfect_matchings", "shedding_all", "simplex_partition_witness",
    "simplicial_vertices", "t10", "two_triangles", "v_graph", "vwc_witness", "whisker",
    "whisker_matching",
]
