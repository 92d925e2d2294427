"""Distinguishing numbers, automorphism groups and distinguishing-critical graphs."""

from .automorphism import (
    AutGroup,
    CanonicalForm,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    equitable_refinement,
)
from .criticality import (
    CriticalityReport,
    StructuralAudit,
    audit_structural_theorems,
    is_critical,
    is_minimal_asymmetric,
    is_strong_critical,
)
from .distinguishing import (
    DistResult,
    count_inequivalent_distinguishing,
    disjoint_copies_distinguishing_number,
    distinguishing_number,
    is_distinguishing,
    multipartite_distinguishing_number,
)
from .enumerate import EnumerationConfig, enumerate_graphs
from .graph import (
    Graph,
    GraphMetrics,
    NamedGraphSpec,
    build_graph,
    classify_a_vertices,
    complement,
    connected_components,
    induced_subgraph,
    is_k_self_centered,
    make_named,
    metrics,
)
from .graph6 import parse_graph6, stream_graph6, write_graph6
from .search import SuiteResult, run_verification_suite, search_critical, search_minimal_asymmetric

__version__ = "0.1.0"
