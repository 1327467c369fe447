"""Exact rooted spanning tree counting for weighted digraphs."""

from .errors import (
    ArborError,
    CapExceeded,
    ColumnSumsNonzero,
    DuplicateLabel,
    IndexOutOfRange,
    InvalidEdgeSubset,
    NonPositiveWeight,
    NotATree,
    NotSquare,
    ParallelEdge,
    ParseError,
    SelfLoop,
    ShapeMismatch,
    UnknownEndpoint,
    UnsortedSelector,
    WrongSubsetSize,
    ZeroVector,
)
from .graph import (
    Digraph,
    Direction,
    Edge,
    EdgeSubset,
    Mode,
    Outcome,
    TreeClassification,
    Vertex,
    build_digraph,
    classify_spanning_tree,
    degree,
    has_directed_cycle,
    is_strongly_connected,
    random_digraph,
)
from .graphio import parse_graph, serialize
from .laplacian import (
    EdgeScaledMatrix,
    LaplacianPair,
    gram_products,
    incidence_in,
    incidence_out,
    laplacians,
    reduced_laplacian,
    verify_factorization,
)
from .linalg import Matrix, cofactor, delete_row_col, det, multiply, power_is_zero, select, transpose
from .spectral import stationary, tree_vector, verify_cofactor_constancy, verify_kernel
from .trees import (
    DEFAULT_CAP,
    binet_cauchy_expansion,
    check_nilpotency,
    count_trees,
    enumerate_trees,
    tree_internal_adjacency,
)

__version__ = "0.1.0"

__all__ = [
    "ArborError",
    "CapExceeded",
    "ColumnSumsNonzero",
    "DEFAULT_CAP",
    "Digraph",
    "Direction",
    "DuplicateLabel",
    "Edge",
    "EdgeScaledMatrix",
    "EdgeSubset",
    "IndexOutOfRange",
    "InvalidEdgeSubset",
    "LaplacianPair",
    "Matrix",
    "Mode",
    "NonPositiveWeight",
    "NotATree",
    "NotSquare",
    "Outcome",
    "ParallelEdge",
    "ParseError",
    "SelfLoop",
    "ShapeMismatch",
    "TreeClassification",
    "UnknownEndpoint",
    "UnsortedSelector",
    "Vertex",
    "WrongSubsetSize",
    "ZeroVector",
    "binet_cauchy_expansion",
    "build_digraph",
    "check_nilpotency",
    "classify_spanning_tree",
    "cofactor",
    "count_trees",
    "degree",
    "delete_row_col",
    "det",
    "enumerate_trees",
    "gram_products",
    "has_directed_cycle",
    "incidence_in",
    "incidence_out",
    "is_strongly_connected",
    "laplacians",
    "multiply",
    "parse_graph",
    "power_is_zero",
    "random_digraph",
    "reduced_laplacian",
    "select",
    "serialize",
    "stationary",
    "transpose",
    "tree_internal_adjacency",
    "tree_vector",
    "verify_cofactor_constancy",
    "verify_factorization",
    "verify_kernel",
]
