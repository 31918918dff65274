"""Exact all-terminal reliability polynomials and their roots."""

from .families import FamilySpec, make_family
from .formats import parse_edge_list, parse_graph6, read_graph_text, to_graph6
from .graph import (
    DisconnectedGraphError,
    GraphError,
    Multigraph,
    Terminals,
    bridges,
    count_cutsets,
    edge_connectivity,
    edge_substitute,
    is_connected,
)
from .poly import (
    PolynomialError,
    RatPoly,
    complex_roots,
    count_distinct_real_roots,
    is_real_rooted,
    isolate_real_roots,
    sturm_sequence,
)
from .reliability import (
    complete_graph_reliability,
    forms,
    h_polynomial,
    reliability,
    reliability_bruteforce,
    split_reliability,
)
from .roots import (
    Verdict,
    beta,
    certify_nonreal,
    gadget_equation,
    k4e_branch,
    reliability_roots,
    synthesize_root_near,
    theta_real_rooted,
    verify_substitution_theorem,
)
from .survey import exhaustive_survey, kn_root_trend, random_survey

__version__ = "0.1.0"

__all__ = [
    "DisconnectedGraphError", "FamilySpec", "GraphError", "Multigraph", "PolynomialError",
    "RatPoly", "Terminals", "Verdict", "beta", "bridges", "certify_nonreal",
    "complete_graph_reliability", "complex_roots", "count_cutsets",
    "count_distinct_real_roots", "edge_connectivity", "edge_substitute",
    "exhaustive_survey", "forms", "gadget_equation", "h_polynomial", "is_connected",
    "is_real_rooted", "isolate_real_roots", "k4e_branch", "kn_root_trend", "make_family",
    "parse_edge_list", "parse_graph6", "random_survey", "read_graph_text", "reliability",
    "reliability_bruteforce", "reliability_roots", "split_reliability", "sturm_sequence",
    "synthesize_root_near", "theta_real_rooted", "to_graph6", "verify_substitution_theorem",
]
