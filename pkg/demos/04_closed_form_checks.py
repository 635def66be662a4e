#!/usr/bin/env python3
"""The closed forms behind the rank and normal-form results, in floats.

Run:  python demos/04_closed_form_checks.py
"""

import numpy as np

from qwalk import (
    cosine_vandermonde_det,
    cosine_vandermonde_matrix,
    det_exact,
    dot_product_evaluated,
    dot_product_formula,
    eigen_check,
    path_eigenpairs,
    reduced_walk_base,
    trig_product_identities,
    walk_det_and_rank_via_eigen,
    walk_matrix,
)

# The quotient base B + Dbar has explicit eigenpairs: cosine-sum vectors at
# equally spaced angles.  Residuals against the exact matrix sit at the
# floating-point noise floor.
n = 9
print(f"predicted eigenpairs of the transposed quotient base, n={n}:")
for row in eigen_check(n):
    print(
        f"  k={row.k}: angle={row.angle:.6f} eigenvalue={row.eigenvalue:.6f} "
        f"allones_dot={row.allones_dot:+.6f} residual={row.residual:.2e}"
    )
print("max residual over n=1..128:",
      max(max(r.residual for r in eigen_check(m)) for m in range(1, 129)))

# The product of the all-ones dots has the closed form (-1)^floor(r/2) 2^(r-1);
# that nonvanishing is exactly why the quotient walk matrix has full rank.
print("\nall-ones dot products:")
for r in (1, 2, 5, 12):
    print(
        f"  r={r:2d}: closed {dot_product_formula(r):6d}   "
        f"even-family product {dot_product_evaluated(r, 'even'):.6f}   "
        f"odd-family product {dot_product_evaluated(r, 'odd'):.6f}"
    )

# Supporting trigonometric identities, evaluated vs closed form.
rec = trig_product_identities(12)
print("\ntrig products at r=12:")
print(f"  prod sin((2k-1)pi/2r)      = {rec.even_sin_product:.12e}  (closed {rec.even_sin_closed:.12e})")
print(f"  prod cos((k-1)pi/(2r-1))   = {rec.odd_cos_half_product:.12e}  (closed {rec.odd_cos_half_closed:.12e})")
print(f"  prod cos(k pi/(2r+1))      = {rec.consecutive_cos_product:.12e}  (closed {rec.consecutive_cos_closed:.12e})")

# The cosine Vandermonde determinant factors into pairwise cosine gaps.
thetas = [0.4, 1.1, 1.9, 2.6]
direct = float(np.linalg.det(cosine_vandermonde_matrix(thetas)))
print(f"\ncosine Vandermonde at {thetas}:")
print(f"  matrix determinant {direct:.12f}")
print(f"  product formula    {cosine_vandermonde_det(thetas):.12f}")

# Putting it together: determinant and rank of a walk matrix from the
# eigenpairs of the transposed generator, against the exact integers.
print("\nwalk determinant/rank from eigenpairs vs exact integers:")
for m in (4, 9, 16, 24):
    base = reduced_walk_base(m)
    pairs = path_eigenpairs(m)
    det, rank = walk_det_and_rank_via_eigen(
        base.to_rows(), [p.eigenvalue for p in pairs], [p.vector for p in pairs]
    )
    exact = det_exact(walk_matrix(base).matrix)
    print(f"  n={m:2d}: eigen det {det:14.6f}  exact det {exact:6d}  eigen rank {rank}")
