"""Exact pseudo-determinants and generalized Cauchy-Binet identities."""

from .charpoly import Polynomial, char_poly, is_nilpotent, pseudo_det, spectral_count
from .errors import BudgetExceeded, GraphError, ParseError, ShapeError
from .exact import (
    Matrix,
    RankFactorization,
    block_diag,
    det,
    inverse,
    kernel_basis,
    mat_mul,
    pseudo_inverse,
    rank,
    rank_factorization,
    rref,
    transpose,
)
from .minors import (
    MinorPattern,
    append_combination,
    append_parallel_rows,
    cauchy_binet_coeffs,
    diag_minor_trace,
    exterior_power,
    minor_det,
    minor_pair_sum,
    pseudo_det_via_minors,
    pythagoras_sum,
    subsets,
)
from .graphs import (
    Graph,
    SimplicialComplex,
    betti_numbers,
    clique_complex,
    dirac_operator,
    incidence_matrix,
    parse_graph,
    rooted_forest_count,
    scalar_laplacian,
    spanning_tree_count,
)

__all__ = [
    "BudgetExceeded", "Graph", "GraphError", "Matrix", "MinorPattern", "ParseError",
    "Polynomial", "RankFactorization", "ShapeError", "SimplicialComplex",
    "append_combination", "append_parallel_rows", "betti_numbers", "block_diag",
    "cauchy_binet_coeffs", "char_poly", "clique_complex", "det", "diag_minor_trace",
    "dirac_operator", "exterior_power", "incidence_matrix", "inverse", "is_nilpotent",
    "kernel_basis", "mat_mul", "minor_det", "minor_pair_sum", "parse_graph",
    "pseudo_det", "pseudo_det_via_minors", "pseudo_inverse", "pythagoras_sum", "rank",
    "rank_factorization", "rooted_forest_count", "rref", "scalar_laplacian",
    "spanning_tree_count", "spectral_count", "subsets", "transpose",
]

__version__ = "0.1.0"
