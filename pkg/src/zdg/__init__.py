"""Zero-divisor graph classification toolkit for small connected graphs.

A connected graph G on vertex set V is a zero-divisor graph when some
commutative semigroup on {0} | V has xy = 0 exactly for the adjacent
pairs.  This package decides that property for every graph on up to 7
vertices: necessary neighborhood conditions first, constructive pattern
families next, and a certificate-producing exhaustive table search last.
"""

from zdg.graphs import Graph, canonical_form, emit_graph6, parse_graph6
from zdg.conditions import check_all_conditions, check_star_condition
from zdg.semigroup import (
    MulTable,
    brute_force_realization,
    compute_candidates,
    find_realization,
    graph_of_table,
    is_associative,
    verify_witness,
)
from zdg.enumeration import classify, enumerate_all, enumerate_connected

__all__ = [
    "Graph",
    "MulTable",
    "brute_force_realization",
    "canonical_form",
    "check_all_conditions",
    "check_star_condition",
    "classify",
    "compute_candidates",
    "emit_graph6",
    "enumerate_all",
    "enumerate_connected",
    "find_realization",
    "graph_of_table",
    "is_associative",
    "parse_graph6",
    "verify_witness",
]

__version__ = "0.1.0"
