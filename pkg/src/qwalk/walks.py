"""Walk matrices: [e, Me, M^2 e, ..., M^(n-1) e] for a square integer M.

Columns are built by repeated matrix-vector products, never by forming
matrix powers.  For the path graph the entries grow like 4^n, which the
exact integer arithmetic absorbs without loss.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    adjacency_matrix,
    dynkin_a,
    mirror_partition,
    quotient,
    reduced_degree_matrix,
    signless_laplacian,
)
from .intmat import IntMatrix

__all__ = [
    "WalkMatrix",
    "walk_matrix",
    "a_walk_matrix",
    "q_walk_matrix",
    "reduced_walk_base",
    "reduced_q_walk_matrix",
]


@dataclass(frozen=True)
class WalkMatrix:
    """A walk matrix together with the matrix that generated it.

    Column j (1-based) of ``matrix`` is base^(j-1) applied to the all-ones
    vector; column 1 is all ones.
    """

    base: IntMatrix
    matrix: IntMatrix
    columns: int


def walk_matrix(m: IntMatrix) -> WalkMatrix:
    """Walk matrix of a square integer matrix, one column per power of m."""
    if not m.is_square:
        raise ValueError(f"walk matrix requires a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n < 1:
        raise ValueError("walk matrix requires at least a 1x1 matrix")
    rows = m.to_rows()
    vec = [1] * n
    cols = [vec]
    for _ in range(n - 1):
        vec = [sum(a * x for a, x in zip(row, vec)) for row in rows]
        cols.append(vec)
    entries = tuple(cols[j][i] for i in range(n) for j in range(n))
    return WalkMatrix(m, IntMatrix(n, n, entries), n)


def a_walk_matrix(g: Graph) -> WalkMatrix:
    """Walk matrix of the adjacency matrix; entry (i, j) counts the walks of
    length j-1 starting at vertex i."""
    return walk_matrix(adjacency_matrix(g))


def q_walk_matrix(g: Graph) -> WalkMatrix:
    """Walk matrix of the signless Laplacian."""
    return walk_matrix(signless_laplacian(g))


def reduced_walk_base(n: int) -> IntMatrix:
    """B + D for the path on n vertices, where B is the divisor matrix of the
    mirror partition and D the reduced degree matrix.

    The walk matrix of this r x r matrix (r = ceil(n/2)) reproduces the
    leading principal block of the path's Q-walk matrix exactly.
    """
    g = dynkin_a(n)
    b = quotient(g, mirror_partition(n)).divisor
    return b + reduced_degree_matrix(n)


def reduced_q_walk_matrix(n: int) -> IntMatrix:
    """Leading ceil(n/2) principal submatrix of the path's Q-walk matrix."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    r = (n + 1) // 2
    return q_walk_matrix(dynkin_a(n)).matrix.leading_submatrix(r)
