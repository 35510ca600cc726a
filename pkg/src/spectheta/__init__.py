"""Workbench for spectral extremal analysis of theta-free graphs of fixed size."""

from .canon import CanonicalLabel, canonical_edge, canonical_form, canonical_label, canonical_order
from .enumeration import (
    BudgetError,
    DEFAULT_EDGE_BUDGET,
    ExtremalRecord,
    count_connected_by_order,
    enumerate_by_edges,
    enumerate_by_order,
    extremal_search,
    extremal_table,
)
from .graph6 import from_graph6, to_graph6
from .graphs import (
    MAX_N,
    Graph,
    book,
    complete,
    complete_bipartite,
    complete_minus_edge,
    cycle,
    family,
    path,
    star,
    star_plus_edge,
)
from .spectral import (
    ConvergenceError,
    SpectralResult,
    bound_value,
    check_nosal,
    eigen_identity_check,
    extremal_vertex,
    spectral_radius,
)
from .theta import (
    ThetaSpec,
    ThetaWitness,
    contains_double_star,
    contains_theta,
    is_theta_free,
    oracle_contains_theta,
    theta_graph,
    validate_witness,
)
from .verify import (
    ComponentClass,
    DecompositionReport,
    LemmaChecklist,
    check_lemma_conclusions,
    decompose,
    inequality_one_check,
    is_book,
    verify_theorem_instance,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CanonicalLabel",
    "ComponentClass",
    "ConvergenceError",
    "DEFAULT_EDGE_BUDGET",
    "DecompositionReport",
    "ExtremalRecord",
    "Graph",
    "LemmaChecklist",
    "MAX_N",
    "SpectralResult",
    "ThetaSpec",
    "ThetaWitness",
    "book",
    "bound_value",
    "canonical_edge",
    "canonical_form",
    "canonical_label",
    "canonical_order",
    "check_lemma_conclusions",
    "check_nosal",
    "complete",
    "complete_bipartite",
    "complete_minus_edge",
    "contains_double_star",
    "contains_theta",
    "count_connected_by_order",
    "cycle",
    "decompose",
    "eigen_identity_check",
    "enumerate_by_edges",
    "enumerate_by_order",
    "extremal_search",
    "extremal_table",
    "extremal_vertex",
    "family",
    "from_graph6",
    "inequality_one_check",
    "is_book",
    "is_theta_free",
    "oracle_contains_theta",
    "path",
    "spectral_radius",
    "star",
    "star_plus_edge",
    "theta_graph",
    "to_graph6",
    "validate_witness",
    "verify_theorem_instance",
]
