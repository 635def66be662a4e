#!/usr/bin/env python3
"""Why the leading block suffices: mirror symmetry and equitable quotients.

Run:  python demos/03_quotient_reduction.py
"""

from qwalk import (
    adjacency_matrix,
    dynkin_a,
    is_equitable,
    mat_mul,
    mirror_partition,
    q_walk_matrix,
    quotient,
    reduced_degree_matrix,
    reduced_q_walk_matrix,
    reduced_walk_base,
    walk_matrix,
)

# The path is symmetric under reflection i -> n+1-i, and the Q-walk matrix
# inherits that: row i equals row n+1-i.
n = 7
w = q_walk_matrix(dynkin_a(n)).matrix
print(f"Q-walk matrix for n={n}:")
print(w)
print("\nrow 1 == row", n, ":", w.row(0) == w.row(n - 1))

# Pair each vertex with its mirror image.  For odd n the middle vertex
# stands alone, giving r = ceil(n/2) cells.
p = mirror_partition(n)
print(f"\nmirror partition: {p.cells}")
print("equitable for the path:", is_equitable(dynkin_a(n), p))

# An equitable partition has a quotient: C marks cell membership and B
# counts neighbors cell-by-cell, with the exact identity A @ C = C @ B.
data = quotient(dynkin_a(n), p)
print("\ncharacteristic matrix C:")
print(data.characteristic)
print("\ndivisor matrix B:")
print(data.divisor)
a = adjacency_matrix(dynkin_a(n))
print("\nA @ C == C @ B:", mat_mul(a, data.characteristic) == mat_mul(data.characteristic, data.divisor))

# Adding the reduced degree matrix gives the small generator whose walk
# matrix is exactly the leading r x r block of the big walk matrix.
base = reduced_walk_base(n)
print("\nquotient walk base B + Dbar:")
print(base)
print("\nits walk matrix:")
print(walk_matrix(base).matrix)
print("\nleading block of the big walk matrix:")
print(reduced_q_walk_matrix(n))
print("\nequal:", walk_matrix(base).matrix == reduced_q_walk_matrix(n))

print("\nthe identity holds along the family:")
for m in range(2, 31):
    assert reduced_q_walk_matrix(m) == walk_matrix(reduced_walk_base(m)).matrix
print("  checked n = 2..30, all equal")
