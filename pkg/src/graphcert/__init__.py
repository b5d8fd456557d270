"""Exact graph-invariant solvers with certificates, constructors for the
named graph families, and a verification harness for the structural
theorems they participate in."""

from .certificates import (
    Certificate,
    CliqueCertificate,
    CliqueCoverCertificate,
    ColoringCertificate,
    MatchingCertificate,
    StableSetCertificate,
    certificate_from_json,
    certificate_size,
    certificate_to_json,
    verify_certificate,
)
from .formats import (
    FormatError,
    parse_dimacs,
    parse_graph6,
    read_graphs,
    to_dimacs,
    to_graph6,
)
from .graph import MAX_VERTICES, Graph
from .solvers import (
    Budget,
    BudgetExceededError,
    ClassMembership,
    SolveResult,
    SolveStats,
    UndecidedError,
    chromatic_number,
    clique_cover_number,
    eventually_identity_bound,
    in_third_stability_class,
    is_factor_critical,
    is_theta_critical,
    max_clique,
    max_deficiency,
    max_matching,
    max_stable_set,
    neighborhood_partition_cover,
    solve_all,
    triangle_free_cover,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BudgetExceededError",
    "Certificate",
    "ClassMembership",
    "CliqueCertificate",
    "CliqueCoverCertificate",
    "ColoringCertificate",
    "FormatError",
    "Graph",
    "MatchingCertificate",
    "MAX_VERTICES",
    "SolveResult",
    "SolveStats",
    "StableSetCertificate",
    "UndecidedError",
    "certificate_from_json",
    "certificate_size",
    "certificate_to_json",
    "chromatic_number",
    "clique_cover_number",
    "eventually_identity_bound",
    "in_third_stability_class",
    "is_factor_critical",
    "is_theta_critical",
    "max_clique",
    "max_deficiency",
    "max_matching",
    "max_stable_set",
    "neighborhood_partition_cover",
    "parse_dimacs",
    "parse_graph6",
    "read_graphs",
    "solve_all",
    "to_dimacs",
    "to_graph6",
    "triangle_free_cover",
    "verify_certificate",
]
