"""Exact H-colorings and cover structures for cubic multigraphs.

The package decides H-colorability by exhaustive backtracking, builds
and verifies cover structures (perfect matching covers, Berge-Fulkerson
covers, even and join covers), computes normal colorings, runs the
constructive pipelines between the catalog graphs, and persists every
positive result as a self-contained certificate.
"""

from .catalog import CATALOG_NAMES, catalog, catalog_name
from .certificates import (
    Certificate,
    certificate_for_cover,
    certificate_for_map,
    certificate_for_normal,
    read_and_verify_certificate,
    serialize_certificate,
    verify_certificate,
    write_certificate,
)
from .clawfree import OumDecomposition, is_claw_free, oum_decompose
from .conjectures import (
    ALL_CUBIC,
    BRIDGELESS,
    CONJECTURES,
    COVERED_BY_FOUR,
    RIGIDITY_TARGETS,
    THREE_EDGE_COLORABLE,
    WITH_PERFECT_MATCHING,
    GraphClassId,
    ScanReport,
    ScanVerdict,
    class_membership,
    conjecture_scan,
    derive_p10_via_p12,
    derive_s10_from_s12,
    minimal_expansion_set,
    normally_colorable,
    rigidity_scan,
)
from .corpus import cubic_multigraph_corpus
from .covers import (
    CoverList,
    chromatic_index_cubic,
    cq_equivalence_check,
    descend_even_cover_through_triangle,
    diamond_string_reduction,
    digon_reduction,
    enumerate_even_subgraphs,
    enumerate_perfect_matchings,
    find_berge_fulkerson,
    find_even_cover_5_2,
    find_parity_cover_4,
    has_perfect_matching,
    is_even,
    is_matching,
    is_parity,
    is_perfect_matching,
    lift_join_cover_to_triangle_expansion,
    pm_cover_number,
    verify_cover,
)
from .errors import HcolorError
from .formats import emit_corpus, emit_mg, parse_corpus, parse_graph6, parse_mg
from .hcoloring import (
    Comparability,
    EdgeMap,
    SolverOptions,
    VerifyReport,
    comparable,
    compose,
    construct_prop10b,
    p12_pm_pair_for_edge,
    preimage,
    solve_hcoloring,
    three_coloring_from_deficient_p10_coloring,
    unused_edges,
    verify_hcoloring,
)
from .isomorphism import automorphisms, edge_pair_orbits, is_isomorphic
from .multigraph import MultiGraph, bridges, build_graph, is_connected, star
from .normal import (
    NEITHER,
    POOR,
    RICH,
    NormalColoring,
    classify_edge,
    induced_normal_coloring,
    jaeger_check,
    normal_chromatic_index,
    solve_normal,
)
from .preservation import (
    PreservationReport,
    pull_back_cover,
    run_preservation_suite,
)
from .transform import (
    Diamond,
    DiamondString,
    TriangleRef,
    contract_triangle,
    expand_vertices_to_triangles,
    expansion_triangle,
    find_diamond_strings,
    find_diamonds,
    find_triangles,
    opposite_edge,
    replace_edge_with_diamond_string,
    ring_of_diamonds,
)

__version__ = "0.1.0"
