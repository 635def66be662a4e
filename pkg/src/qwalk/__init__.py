"""Exact walk-matrix computations for graphs.

Builds adjacency/degree/signless-Laplacian matrices and their walk matrices
in arbitrary-precision integer arithmetic, computes ranks, determinants, and
Smith normal forms exactly, and cross-checks the closed-form predictions for
the path graph (rank ceil(n/2), Smith form diag(1, 2, ..., 2, 0, ..., 0),
reduced determinant 2^(ceil(n/2)-1)) against those exact algorithms.
"""

from .closedform import (
    EigenCheckRow,
    EigenpairPrediction,
    SnfPrediction,
    TrigProductRecord,
    cosine_vandermonde_det,
    cosine_vandermonde_matrix,
    dot_product_evaluated,
    dot_product_formula,
    eigen_check,
    eigenpair_even,
    eigenpair_odd,
    path_eigenpairs,
    predicted_rank,
    predicted_reduced_det,
    predicted_snf,
    sine_product_identity,
    trig_product_identities,
    walk_det_and_rank_via_eigen,
)
from .graphs import (
    EquitablePartition,
    Graph,
    QuotientData,
    adjacency_matrix,
    degree_matrix,
    dynkin_a,
    format_graph_text,
    graph_from_json,
    graph_to_json,
    is_equitable,
    mirror_partition,
    parse_graph_text,
    quotient,
    reduced_degree_matrix,
    signless_laplacian,
)
from .intmat import (
    IntMatrix,
    MatrixParseError,
    SmithDecomposition,
    SnfResult,
    det_exact,
    determinant_divisor,
    format_matrix_text,
    invariant_factors_from_divisors,
    mat_mul,
    matrix_from_json,
    matrix_to_json,
    ones_column,
    parse_matrix_text,
    rank_exact,
    smith_decomposition,
    smith_normal_form,
    smith_normal_form_by_minors,
)
from .verify import (
    CheckRecord,
    FuzzResult,
    VerificationReport,
    VerifyOptions,
    oracle_snf_fuzz,
    report_from_json,
    report_to_csv,
    report_to_json,
    verify_range,
)
from .walks import (
    WalkMatrix,
    a_walk_matrix,
    q_walk_matrix,
    reduced_q_walk_matrix,
    reduced_walk_base,
    walk_matrix,
)

__version__ = "0.1.0"
