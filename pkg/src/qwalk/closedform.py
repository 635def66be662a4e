"""Closed-form predictions for the path graph's Q-walk matrix.

For the path on n vertices, with r = ceil(n/2), the quotient matrix of the
mirror partition has explicit eigenpairs built from the angles

    even n:  (2k - 1) * pi / (2r),    k = 1..r
    odd  n:  (2k - 2) * pi / (2r - 1), k = 1..r

and the walk matrix of the quotient has determinant 2^(r-1), from which the
rank ceil(n/2) and the Smith normal form diag(1, 2, ..., 2, 0, ..., 0)
follow.  Everything here is double-precision evaluation of those formulas;
the exact integer verification lives in the matrix and verifier modules, so
float error never decides an integer claim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .walks import reduced_walk_base

__all__ = [
    "EigenpairPrediction",
    "SnfPrediction",
    "TrigProductRecord",
    "EigenCheckRow",
    "predicted_rank",
    "predicted_snf",
    "predicted_reduced_det",
    "eigenpair_even",
    "eigenpair_odd",
    "path_eigenpairs",
    "eigen_check",
    "dot_product_formula",
    "dot_product_evaluated",
    "cosine_vandermonde_det",
    "cosine_vandermonde_matrix",
    "trig_product_identities",
    "sine_product_identity",
    "walk_det_and_rank_via_eigen",
]

Parity = Literal["even", "odd"]


def predicted_rank(n: int) -> int:
    """ceil(n/2): the rank of the path's Q-walk matrix."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    return (n + 1) // 2


@dataclass(frozen=True)
class SnfPrediction:
    """Predicted Smith normal form diag(1, 2, ..., 2, 0, ..., 0)."""

    n: int
    rank: int
    factors: tuple[int, ...]
    zeros: int


def predicted_snf(n: int) -> SnfPrediction:
    r = predicted_rank(n)
    return SnfPrediction(n=n, rank=r, factors=(1,) + (2,) * (r - 1), zeros=n - r)


def predicted_reduced_det(n: int) -> int:
    """2^(ceil(n/2) - 1): the reduced Q-walk matrix's determinant."""
    return 2 ** (predicted_rank(n) - 1)


@dataclass(frozen=True)
class EigenpairPrediction:
    """Predicted eigenpair of the transposed quotient matrix.

    ``vector`` has r entries with the last entry exactly 1.
    """

    k: int
    angle: float
    eigenvalue: float
    vector: tuple[float, ...]


def _check_kr(r: int, k: int) -> None:
    if r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    if not (1 <= k <= r):
        raise ValueError(f"k={k} out of range 1..{r}")


def eigenpair_even(r: int, k: int) -> EigenpairPrediction:
    """k-th eigenpair for even paths (n = 2r).

    Entry j (from the top) is (-1)^(r-j) * (1 + sum_{i=1}^{r-j} 2 cos(i*t))
    with t = (2k-1)pi/(2r); the last entry is 1.
    """
    _check_kr(r, k)
    t = (2 * k - 1) * math.pi / (2 * r)
    vec = [0.0] * r
    partial = 1.0
    vec[r - 1] = 1.0
    for m in range(1, r):
        partial += 2.0 * math.cos(m * t)
        vec[r - 1 - m] = partial if m % 2 == 0 else -partial
    return EigenpairPrediction(k=k, angle=t, eigenvalue=2.0 - 2.0 * math.cos(t), vector=tuple(vec))


def eigenpair_odd(r: int, k: int) -> EigenpairPrediction:
    """k-th eigenpair for odd paths (n = 2r - 1).

    Entry j is (-1)^(r-j) * 2 cos((r-j)*t) with t = (2k-2)pi/(2r-1); the
    last entry is 1 (not 2 cos 0).
    """
    _check_kr(r, k)
    t = (2 * k - 2) * math.pi / (2 * r - 1)
    vec = [0.0] * r
    vec[r - 1] = 1.0
    for m in range(1, r):
        c = 2.0 * math.cos(m * t)
        vec[r - 1 - m] = c if m % 2 == 0 else -c
    return EigenpairPrediction(k=k, angle=t, eigenvalue=2.0 - 2.0 * math.cos(t), vector=tuple(vec))


def path_eigenpairs(n: int) -> list[EigenpairPrediction]:
    """All r predicted eigenpairs for the path on n vertices."""
    r = predicted_rank(n)
    make = eigenpair_even if n % 2 == 0 else eigenpair_odd
    return [make(r, k) for k in range(1, r + 1)]


@dataclass(frozen=True)
class EigenCheckRow:
    """One eigenpair checked against the actual quotient matrix."""

    k: int
    angle: float
    eigenvalue: float
    allones_dot: float
    residual: float


def eigen_check(n: int) -> list[EigenCheckRow]:
    """Residuals ||M^T v_k - lambda_k v_k||_inf against the exact quotient
    matrix M = B + D of the path on n vertices, plus the all-ones dots."""
    pairs = path_eigenpairs(n)
    mt = np.array(reduced_walk_base(n).to_rows(), dtype=float).T
    rows = []
    for p in pairs:
        v = np.array(p.vector)
        residual = float(np.max(np.abs(mt @ v - p.eigenvalue * v)))
        rows.append(
            EigenCheckRow(
                k=p.k,
                angle=p.angle,
                eigenvalue=p.eigenvalue,
                allones_dot=float(v.sum()),
                residual=residual,
            )
        )
    return rows


def dot_product_formula(r: int) -> int:
    """Closed form (-1)^floor(r/2) * 2^(r-1) for the product over k of the
    all-ones dot with the k-th predicted eigenvector (either parity)."""
    if r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    return (-1) ** (r // 2) * 2 ** (r - 1)


def dot_product_evaluated(r: int, parity: Parity) -> float:
    """Companion numeric path: the same product evaluated from the vectors."""
    make = eigenpair_even if parity == "even" else eigenpair_odd
    out = 1.0
    for k in range(1, r + 1):
        out *= math.fsum(make(r, k).vector)
    return out


def cosine_vandermonde_matrix(thetas: Sequence[float]) -> np.ndarray:
    """The q x q matrix with rows (1, 1, ..., 1), (2 cos t_j), (2 cos 2t_j), ..."""
    q = len(thetas)
    if q < 1:
        raise ValueError("need at least one angle")
    t = np.asarray(thetas, dtype=float)
    out = np.empty((q, q))
    out[0] = 1.0
    for i in range(1, q):
        out[i] = 2.0 * np.cos(i * t)
    return out


def cosine_vandermonde_det(thetas: Sequence[float]) -> float:
    """Product form of the determinant of ``cosine_vandermonde_matrix``:
    prod over j < i of (2 cos t_i - 2 cos t_j)."""
    if len(thetas) < 1:
        raise ValueError("need at least one angle")
    out = 1.0
    for i in range(1, len(thetas)):
        for j in range(i):
            out *= 2.0 * math.cos(thetas[i]) - 2.0 * math.cos(thetas[j])
    return out


@dataclass(frozen=True)
class TrigProductRecord:
    """Evaluated trigonometric products next to their closed forms.

    even_sin_*: product of sin((2k-1)pi/(2r)) for k = 1..r, closed 2^(1-r).
    odd_cos_half_*: product of cos((k-1)pi/(2r-1)) for k = 1..r, closed 2^(1-r).
    consecutive_cos_*: product of cos(k pi/(2r+1)) for k = 1..r, closed 2^(-r).
    """

    r: int
    even_sin_product: float
    even_sin_closed: float
    odd_cos_half_product: float
    odd_cos_half_closed: float
    consecutive_cos_product: float
    consecutive_cos_closed: float


def trig_product_identities(r: int) -> TrigProductRecord:
    if r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    even_sin = 1.0
    odd_cos_half = 1.0
    consecutive_cos = 1.0
    for k in range(1, r + 1):
        even_sin *= math.sin((2 * k - 1) * math.pi / (2 * r))
        odd_cos_half *= math.cos((k - 1) * math.pi / (2 * r - 1))
        consecutive_cos *= math.cos(k * math.pi / (2 * r + 1))
    return TrigProductRecord(
        r=r,
        even_sin_product=even_sin,
        even_sin_closed=2.0 ** (1 - r),
        odd_cos_half_product=odd_cos_half,
        odd_cos_half_closed=2.0 ** (1 - r),
        consecutive_cos_product=consecutive_cos,
        consecutive_cos_closed=2.0 ** (-r),
    )


def sine_product_identity(theta: float, n: int) -> tuple[float, float]:
    """Both sides of sin(n*theta) = 2^(n-1) * prod_{k=0}^{n-1} sin(theta + k pi/n)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    rhs = 2.0 ** (n - 1)
    for k in range(n):
        rhs *= math.sin(theta + k * math.pi / n)
    return math.sin(n * theta), rhs


def walk_det_and_rank_via_eigen(
    m: Sequence[Sequence[float]] | np.ndarray,
    eigvals: Sequence[float],
    eigvecs: Sequence[Sequence[float]],
    *,
    dot_tol: float = 1e-8,
    singular_tol: float = 1e-12,
    distinct_tol: float = 1e-12,
) -> tuple[float, int]:
    """Determinant and rank of the walk matrix of m from eigenpairs of m^T.

    Given n linearly independent eigenvectors xi_1..xi_n of m^T with
    eigenvalues l_1..l_n:

        det W(m) = prod_{k<j} (l_j - l_k) * prod_j (e^T xi_j) / det [xi_1 ... xi_n]
        rank W(m) = #{ j : e^T xi_j != 0 }   (requires distinct eigenvalues)

    The eigenvector matrix is rejected as near-singular when |det| divided
    by the product of column norms falls below ``singular_tol``; the rank
    formula is refused when two eigenvalues are closer than ``distinct_tol``.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if len(eigvals) != n or len(eigvecs) != n:
        raise ValueError(f"need exactly {n} eigenvalues and eigenvectors")
    basis = np.column_stack([np.asarray(v, dtype=float) for v in eigvecs])
    if basis.shape != (n, n):
        raise ValueError(f"eigenvectors must each have length {n}")
    det_basis = float(np.linalg.det(basis))
    norms = np.linalg.norm(basis, axis=0)
    scale = float(np.prod(norms))
    if scale == 0.0 or abs(det_basis) <= singular_tol * scale:
        raise ValueError("eigenvector matrix is numerically singular")
    vals = [float(x) for x in eigvals]
    for i in range(n):
        for j in range(i + 1, n):
            if abs(vals[i] - vals[j]) <= distinct_tol:
                raise ValueError(
                    f"rank formula requires pairwise distinct eigenvalues; "
                    f"{vals[i]} and {vals[j]} coincide"
                )
    gaps = 1.0
    for j in range(n):
        for k in range(j):
            gaps *= vals[j] - vals[k]
    dots = basis.sum(axis=0)
    det = gaps * float(np.prod(dots)) / det_basis
    rank = int(np.count_nonzero(np.abs(dots) > dot_tol))
    return det, rank
