#!/usr/bin/env python3
"""A tour of the basic objects: path graphs and their matrices.

Run:  python demos/01_path_matrices.py
"""

from qwalk import (
    IntMatrix,
    adjacency_matrix,
    degree_matrix,
    dynkin_a,
    mat_mul,
    ones_column,
    q_walk_matrix,
    signless_laplacian,
    walk_matrix,
)

# The path graph on n vertices, labeled 1..n left to right.
n = 5
g = dynkin_a(n)
print(f"path on {n} vertices, edges: {sorted(g.edges)}")

# Its three matrices.  Everything is an IntMatrix of exact Python ints.
a = adjacency_matrix(g)
d = degree_matrix(g)
q = signless_laplacian(g)
print("\nadjacency A:")
print(a)
print("\ndegree D (endpoints have degree 1, inner vertices 2):")
print(d)
print("\nsignless Laplacian Q = A + D:")
print(q)

# The walk matrix stacks e, Qe, Q^2 e, ... as columns, where e is all ones.
# Each column is one more application of Q, so entries grow fast -- that's
# why everything is arbitrary-precision.
e = ones_column(n)
col = e
print("\ncolumns of the Q-walk matrix, one power at a time:")
for j in range(n):
    print(f"  Q^{j} e = {list(col.column(0))}")
    col = mat_mul(q, col)

wm = q_walk_matrix(g)
print("\nassembled Q-walk matrix:")
print(wm.matrix)

# The generic constructor works for any square integer matrix.
print("\nwalk matrix of an arbitrary 2x2 matrix [[1,1],[2,2]]:")
print(walk_matrix(IntMatrix.from_rows([[1, 1], [2, 2]])).matrix)

# Entry growth at n=40: the largest entry has dozens of digits, still exact.
w40 = q_walk_matrix(dynkin_a(40)).matrix
largest = max(w40.entries)
print(f"\nat n=40 the largest walk-matrix entry has {len(str(largest))} digits:")
print(f"  {largest}")
