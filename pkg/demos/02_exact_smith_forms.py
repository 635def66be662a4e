#!/usr/bin/env python3
"""Exact rank, determinant, and Smith normal form of integer matrices.

Run:  python demos/02_exact_smith_forms.py
"""

from qwalk import (
    IntMatrix,
    det_exact,
    determinant_divisor,
    dynkin_a,
    q_walk_matrix,
    rank_exact,
    reduced_q_walk_matrix,
    smith_decomposition,
    smith_normal_form,
    smith_normal_form_by_minors,
)

# The Smith normal form of an integer matrix is the diagonal
# diag(d_1, ..., d_r, 0, ..., 0) reachable by unimodular row/column
# operations, with each d_i dividing the next.
m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
snf = smith_normal_form(m, with_divisors=True)
print("matrix:")
print(m)
print(f"rank {snf.rank}, invariant factors {snf.invariant_factors}")
print(f"determinant divisors D(k): {snf.determinant_divisors}")

# The divisors route is an independent definition: D(k) is the gcd of all
# k x k minors, and d_k = D(k)/D(k-1).  Enumerating minors is exponential,
# so it is reserved for small matrices -- but it agrees with elimination.
print("\ngcd of all 2x2 minors:", determinant_divisor(m, 2))
print("SNF reconstructed from minors:", smith_normal_form_by_minors(m).invariant_factors)

# Unimodular witnesses: U @ m @ V is exactly the diagonal form, and both
# transforms have determinant +-1.
dec = smith_decomposition(m)
print("\n|det U| =", abs(det_exact(dec.left)), " |det V| =", abs(det_exact(dec.right)))
print("U @ m @ V:")
print(dec.left @ m @ dec.right)

# Now the headline computation: for the path on n vertices the Q-walk
# matrix has rank ceil(n/2) and Smith form diag(1, 2, ..., 2, 0, ..., 0).
print("\nQ-walk Smith forms along the path family:")
for n in range(1, 13):
    w = q_walk_matrix(dynkin_a(n)).matrix
    snf = smith_normal_form(w)
    print(f"  n={n:2d}: rank {snf.rank} (ceil(n/2)={ (n+1)//2 }), factors {snf.invariant_factors}")

# The reduced matrix (leading ceil(n/2) block) concentrates all of the
# information; its determinant is the power of two 2^(r-1).
print("\nreduced-block determinants:")
for n in (2, 5, 10, 21, 40):
    print(f"  n={n:2d}: det = {det_exact(reduced_q_walk_matrix(n))}")

print("\nexact rank at n=60:", rank_exact(q_walk_matrix(dynkin_a(60)).matrix))
