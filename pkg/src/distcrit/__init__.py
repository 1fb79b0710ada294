"""Toolkit for distance-critical graphs.

A graph is distance critical when deleting any single vertex changes at
least one distance between the remaining vertices (a finite distance
turning unreachable counts as a change).  Equivalently, every vertex v
has a determining pair: two nonadjacent vertices whose unique common
neighbor is v.  The package provides the graph type and criticality
tests, canonical forms, the standard graph products, the known extremal
constructions, isomorph-free enumeration with census tallies, and a
harness that machine-checks the structural laws on exhaustive small
universes.
"""

from .canon import (
    CanonicalForm,
    automorphism_generators,
    automorphism_orbits,
    canonical_form,
    canonical_labeling,
    graph_from_form,
)
from .clique import max_clique, max_clique_size
from .constructions import (
    GammaLayout,
    cycle,
    cycle_power,
    embed_host,
    gamma,
    max_degree_extremal,
    regular_extremal,
)
from .criticality import (
    CriticalityReport,
    common_neighbors,
    determining_pairs_of,
    involved_set,
    is_distance_critical,
    is_distance_critical_direct,
    is_distance_critical_pairs,
    is_edge_maximal_critical,
)
from .enumeration import (
    EnumerationTally,
    count_distance_critical,
    count_edge_maximal,
    enumerate_connected,
    iter_all_graphs,
    iter_connected,
    run_enumeration,
    tally_levels,
)
from .graph import (
    MAX_VERTICES,
    UNREACHABLE,
    DistanceTable,
    Graph,
    all_pairs_distances,
    articulation_points,
    disjoint_union,
    girth,
    is_connected,
    is_two_connected,
)
from .graph6 import Graph6Error, decode_graph6, encode_graph6, to_dot
from .products import ProductKind, ProductLemmaReport, check_product_lemmas, product
from .verify import (
    LEMMA_IDS,
    LemmaCheck,
    graham_pollak_determinant,
    pendant_deletion_check,
    run_all_lemmas,
    run_lemma,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "CriticalityReport",
    "DistanceTable",
    "EnumerationTally",
    "GammaLayout",
    "Graph",
    "Graph6Error",
    "LEMMA_IDS",
    "LemmaCheck",
    "MAX_VERTICES",
    "ProductKind",
    "ProductLemmaReport",
    "UNREACHABLE",
    "all_pairs_distances",
    "articulation_points",
    "automorphism_generators",
    "automorphism_orbits",
    "canonical_form",
    "canonical_labeling",
    "check_product_lemmas",
    "common_neighbors",
    "count_distance_critical",
    "count_edge_maximal",
    "cycle",
    "cycle_power",
    "decode_graph6",
    "determining_pairs_of",
    "disjoint_union",
    "embed_host",
    "encode_graph6",
    "enumerate_connected",
    "gamma",
    "girth",
    "graham_pollak_determinant",
    "graph_from_form",
    "involved_set",
    "is_connected",
    "is_distance_critical",
    "is_distance_critical_direct",
    "is_distance_critical_pairs",
    "is_edge_maximal_critical",
    "is_two_connected",
    "iter_all_graphs",
    "iter_connected",
    "max_clique",
    "max_clique_size",
    "max_degree_extremal",
    "pendant_deletion_check",
    "product",
    "regular_extremal",
    "run_all_lemmas",
    "run_enumeration",
    "run_lemma",
    "tally_levels",
    "to_dot",
]
