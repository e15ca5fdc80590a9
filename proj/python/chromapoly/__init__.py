"""Exact chromatic polynomials of graphs and hypergraphs.

The heavy lifting happens in the compiled extension `_chromapoly`; this
package re-exports its public surface.
"""

from ._chromapoly import (
    Hypergraph,
    HypergraphParseError,
    SizeLimitError,
    a1_complete,
    a1_complete_piecewise,
    a1_complete_recursive,
    a1_recursive,
    b_direct,
    b_partition,
    broken_cycles,
    chromatic_bruteforce,
    chromatic_deletion_contraction,
    chromatic_subset_expansion,
    coefficients_recursive,
    complete_graph,
    complete_hypergraph,
    components,
    induced_subgraph,
    interpolate_from_counts,
    is_broken_cyclic,
    log_derivative_series,
    nbc_counts,
    parse_hypergraph,
    partitions_meeting_edge,
    path_graph,
    poly_eval,
    pruned_expansion,
    reciprocal_power_sums,
    series_check,
    taylor_roots,
    to_text,
    zemyan_identity_residual,
)

__version__ = "0.1.0"

__all__ = [
    "Hypergraph",
    "HypergraphParseError",
    "SizeLimitError",
    "a1_complete",
    "a1_complete_piecewise",
    "a1_complete_recursive",
    "a1_recursive",
    "b_direct",
    "b_partition",
    "broken_cycles",
    "chromatic_bruteforce",
    "chromatic_deletion_contraction",
    "chromatic_subset_expansion",
    "coefficients_recursive",
    "complete_graph",
    "complete_hypergraph",
    "components",
    "induced_subgraph",
    "interpolate_from_counts",
    "is_broken_cyclic",
    "log_derivative_series",
    "nbc_counts",
    "parse_hypergraph",
    "partitions_meeting_edge",
    "path_graph",
    "poly_eval",
    "pruned_expansion",
    "reciprocal_power_sums",
    "series_check",
    "taylor_roots",
    "to_text",
    "zemyan_identity_residual",
]
