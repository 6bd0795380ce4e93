"""Vertex-critical graphs in the (gem, co-gem)-free and (P3 + lP1)-free classes."""

from .catalog import CatalogEntry, base_graph, very_good_check
from .certify import Certificate, certify, verify_certificate
from .coloring import Coloring, chromatic_number, k_colorable, verify_coloring
from .criticality import CriticalityReport, is_k_vertex_critical
from .detectors import (
    ForbiddenFamily,
    family,
    find_induced,
    find_nontrivial_module,
    freeness_witness,
    is_very_good_stable_set,
    max_clique,
    max_stable_set,
    maximal_cliques,
)
from .expansion import (
    canonical_profile,
    count_table,
    critical_profiles,
    enumerate_k_critical,
    expand,
    expand_c5,
    is_critical_profile,
    profile_chi,
)
from .graph import Graph, are_isomorphic, build_graph, complement, induced_subgraph
from .graph6 import Graph6Error, decode_graph6, encode_graph6

__all__ = [
    "CatalogEntry", "Certificate", "Coloring", "CriticalityReport", "ForbiddenFamily", "Graph",
    "Graph6Error", "are_isomorphic", "base_graph", "build_graph", "canonical_profile",
    "certify", "chromatic_number", "complement", "count_table", "critical_profiles",
    "decode_graph6", "encode_graph6", "enumerate_k_critical", "expand", "expand_c5", "family",
    "find_induced", "find_nontrivial_module", "freeness_witness", "induced_subgraph",
    "is_critical_profile", "is_k_vertex_critical", "is_very_good_stable_set", "k_colorable",
    "max_clique", "max_stable_set", "maximal_cliques", "profile_chi", "verify_certificate",
    "verify_coloring", "very_good_check",
]
