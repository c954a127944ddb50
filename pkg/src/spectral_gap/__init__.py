"""Spectral gap certificates for irregular graphs.

Power iteration and a Jacobi oracle for the extreme adjacency eigenvalues,
exact walk counting, the G_{Delta,k} tightness family, and a catalog of
gap lower bounds with pass/fail verdicts.
"""

from .bounds import (
    BoundReport,
    Check,
    alon_sudakov_bound,
    certify,
    crucin_upper,
    main_gap_bound,
    stevanovic_bound,
    zhang_bound,
)
from .edgelist import emit_edge_list, parse_edge_list
from .errors import SpectralGapError
from .families import FamilyParams, build_gdk, sine_test_vector
from .graph import Graph, StructureReport, from_edge_list, structure
from .spectral import dense_spectrum, largest_eigenvalue, smallest_eigenvalue
from .walks import (
    bipartite_wei_check,
    walk_count_spectral,
    walk_counts,
    walk_ratio_bound,
    wei_limit_deviation,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "Check",
    "FamilyParams",
    "Graph",
    "SpectralGapError",
    "StructureReport",
    "alon_sudakov_bound",
    "bipartite_wei_check",
    "build_gdk",
    "certify",
    "crucin_upper",
    "dense_spectrum",
    "emit_edge_list",
    "from_edge_list",
    "largest_eigenvalue",
    "main_gap_bound",
    "parse_edge_list",
    "sine_test_vector",
    "smallest_eigenvalue",
    "stevanovic_bound",
    "structure",
    "walk_count_spectral",
    "walk_counts",
    "walk_ratio_bound",
    "wei_limit_deviation",
    "zhang_bound",
]
