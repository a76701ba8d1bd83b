"""mainspec: main eigenvalues of graphs, walk-matrix rank, and complements.

The package computes the main spectrum of a simple undirected graph two ways
— a dense Jacobi eigendecomposition with all-ones projections, and the exact
integer rank of the walk matrix — cross-checks them, and bundles checkers for
a family of claims tying main eigenvalues to degrees, harmonicity, and the
complement's spectrum.
"""
from .analysis import GraphAnalysis, RouteDisagreementError, analyze_graph, analyze_pair
from .exact import (
    EquitablePartition,
    IntPolynomial,
    NotEquitableError,
    WalkMatrix,
    coarsest_equitable,
    divisor_walk_matrix,
    divisor_walk_rank,
    exact_det,
    exact_rank,
    verify_equitable,
    walk_matrix,
)
from .graph6 import (
    EdgeListError,
    Graph6Error,
    parse_edgelist,
    parse_graph6,
    serialize_edgelist,
    serialize_graph6,
)
from .graphs import (
    FamilySpec,
    Graph,
    ParameterError,
    build_family,
    complement,
    complete,
    complete_bipartite,
    cycle,
    double_star,
    enumerate_graphs,
    harmonic_tree,
    is_bipartite,
    is_connected,
    is_semiregular_bipartite,
    path,
    pendant_decorated,
    star,
)
from .spectra import (
    AmbiguousGroupingError,
    ClassificationUncertainError,
    ConvergenceError,
    EigenDecomposition,
    EigenGroup,
    MainSpectrum,
    SpectralInvariantError,
    classify_main,
    decompose_all_ones,
    eigen_decompose,
    group_eigenvalues,
)
from .theorems import ALL_IDS, CLAIMS, TheoremReport

__version__ = "0.1.0"

__all__ = [
    "ALL_IDS",
    "AmbiguousGroupingError",
    "CLAIMS",
    "ClassificationUncertainError",
    "ConvergenceError",
    "EdgeListError",
    "EigenDecomposition",
    "EigenGroup",
    "EquitablePartition",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "GraphAnalysis",
    "IntPolynomial",
    "MainSpectrum",
    "NotEquitableError",
    "ParameterError",
    "RouteDisagreementError",
    "SpectralInvariantError",
    "TheoremReport",
    "WalkMatrix",
    "analyze_graph",
    "analyze_pair",
    "build_family",
    "classify_main",
    "coarsest_equitable",
    "complement",
    "complete",
    "complete_bipartite",
    "cycle",
    "decompose_all_ones",
    "divisor_walk_matrix",
    "divisor_walk_rank",
    "double_star",
    "eigen_decompose",
    "enumerate_graphs",
    "exact_det",
    "exact_rank",
    "group_eigenvalues",
    "harmonic_tree",
    "is_bipartite",
    "is_connected",
    "is_semiregular_bipartite",
    "parse_edgelist",
    "parse_graph6",
    "path",
    "pendant_decorated",
    "serialize_edgelist",
    "serialize_graph6",
    "star",
    "verify_equitable",
    "walk_matrix",
]
