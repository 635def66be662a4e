import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qwalk.closedform import (
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
from qwalk.intmat import det_exact, rank_exact
from qwalk.walks import reduced_walk_base, walk_matrix

SQRT2 = math.sqrt(2.0)


def test_predicted_rank():
    assert predicted_rank(10) == 5
    assert predicted_rank(3) == 2
    assert predicted_rank(1) == 1
    with pytest.raises(ValueError):
        predicted_rank(0)


def test_predicted_snf():
    p3 = predicted_snf(3)
    assert (p3.rank, p3.factors, p3.zeros) == (2, (1, 2), 1)
    p2 = predicted_snf(2)
    assert (p2.rank, p2.factors, p2.zeros) == (1, (1,), 1)
    p10 = predicted_snf(10)
    assert (p10.rank, p10.factors, p10.zeros) == (5, (1, 2, 2, 2, 2), 5)
    assert predicted_snf(7).rank == predicted_rank(7)


def test_predicted_reduced_det():
    assert predicted_reduced_det(3) == 2
    assert predicted_reduced_det(10) == 16
    assert predicted_reduced_det(1) == 1


# ---------------------------------------------------------------------------
# Eigenpairs
# ---------------------------------------------------------------------------


def test_eigenpair_even_r1():
    p = eigenpair_even(1, 1)
    assert p.angle == pytest.approx(math.pi / 2)
    assert p.eigenvalue == pytest.approx(2.0)
    assert p.vector == (1.0,)


def test_eigenpair_even_r2():
    p1 = eigenpair_even(2, 1)
    assert p1.angle == pytest.approx(math.pi / 4)
    assert p1.eigenvalue == pytest.approx(2.0 - SQRT2)
    assert p1.vector[0] == pytest.approx(-1.0 - SQRT2)
    assert p1.vector[1] == 1.0
    p2 = eigenpair_even(2, 2)
    assert p2.eigenvalue == pytest.approx(2.0 + SQRT2)
    assert p2.vector[0] == pytest.approx(-1.0 + SQRT2)


def test_eigenpair_odd_r2():
    p1 = eigenpair_odd(2, 1)
    assert (p1.angle, p1.eigenvalue) == (0.0, 0.0)
    assert p1.vector == (-2.0, 1.0)
    p2 = eigenpair_odd(2, 2)
    assert p2.angle == pytest.approx(2 * math.pi / 3)
    assert p2.eigenvalue == pytest.approx(3.0)
    assert p2.vector[0] == pytest.approx(1.0)


def test_eigenpair_odd_r1():
    p = eigenpair_odd(1, 1)
    assert (p.angle, p.eigenvalue, p.vector) == (0.0, 0.0, (1.0,))


def test_eigenpair_range_checks():
    for fn in (eigenpair_even, eigenpair_odd):
        with pytest.raises(ValueError):
            fn(3, 0)
        with pytest.raises(ValueError):
            fn(3, 4)
        with pytest.raises(ValueError):
            fn(0, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 8, 17, 64, 128])
def test_last_vector_entry_is_one(n):
    for p in path_eigenpairs(n):
        assert p.vector[-1] == 1.0


@pytest.mark.parametrize("n", [2, 3, 4, 5, 10, 31, 64, 100, 128])
def test_eigen_residuals_small(n):
    assert max(row.residual for row in eigen_check(n)) <= 1e-8


@pytest.mark.parametrize("n", [1, 2, 3, 12, 77, 128])
def test_eigenvalues_strictly_increasing(n):
    vals = [p.eigenvalue for p in path_eigenpairs(n)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_parity_dispatch_matches_quotient_dimensions():
    for n in (5, 6):
        pairs = path_eigenpairs(n)
        assert len(pairs) == predicted_rank(n)
        assert len(pairs[0].vector) == predicted_rank(n)


# ---------------------------------------------------------------------------
# Product formulas
# ---------------------------------------------------------------------------


def test_dot_product_closed_form_values():
    assert dot_product_formula(1) == 1
    assert dot_product_formula(2) == -2
    assert dot_product_formula(5) == 16


@pytest.mark.parametrize("parity", ["even", "odd"])
@pytest.mark.parametrize("r", list(range(1, 31)))
def test_dot_product_formula_vs_evaluation(r, parity):
    expected = dot_product_formula(r)
    got = dot_product_evaluated(r, parity)
    assert abs(got - expected) <= 1e-9 * 2 ** (r - 1)


def test_vandermonde_matrix_layout():
    m = cosine_vandermonde_matrix([math.pi / 3, math.pi / 2])
    assert m[0].tolist() == [1.0, 1.0]
    assert m[1][0] == pytest.approx(1.0)
    assert m[1][1] == pytest.approx(0.0)


def test_vandermonde_examples():
    assert cosine_vandermonde_det([0.7]) == 1.0
    assert cosine_vandermonde_det([math.pi / 3, math.pi / 2]) == pytest.approx(-1.0)
    thetas = [math.pi / 6, math.pi / 4, math.pi / 3]
    product = cosine_vandermonde_det(thetas)
    direct = np.linalg.det(cosine_vandermonde_matrix(thetas))
    assert product == pytest.approx(direct, abs=1e-10)


@settings(max_examples=120, deadline=None)
@given(
    st.lists(
        st.floats(min_value=0.05, max_value=math.pi - 0.05),
        min_size=1,
        max_size=8,
        unique_by=lambda t: round(t, 2),
    )
)
def test_vandermonde_matches_direct_determinant(thetas):
    product = cosine_vandermonde_det(thetas)
    direct = float(np.linalg.det(cosine_vandermonde_matrix(thetas)))
    assert abs(product - direct) <= 1e-8 * max(1.0, abs(product))


def test_trig_identities_examples():
    rec = trig_product_identities(2)
    assert rec.even_sin_product == pytest.approx(0.5)
    assert rec.even_sin_closed == 0.5
    rec1 = trig_product_identities(1)
    assert rec1.even_sin_product == pytest.approx(1.0)
    assert rec1.odd_cos_half_product == pytest.approx(1.0)
    # consecutive-cos product with one factor: cos(pi/3) = 1/2
    assert rec1.consecutive_cos_product == pytest.approx(0.5)
    assert rec1.consecutive_cos_closed == 0.5


@pytest.mark.parametrize("r", range(1, 41))
def test_trig_identities_ranges(r):
    rec = trig_product_identities(r)
    assert abs(rec.even_sin_product - rec.even_sin_closed) <= 1e-10 * rec.even_sin_closed
    assert (
        abs(rec.odd_cos_half_product - rec.odd_cos_half_closed)
        <= 1e-10 * rec.odd_cos_half_closed
    )
    assert (
        abs(rec.consecutive_cos_product - rec.consecutive_cos_closed)
        <= 1e-10 * rec.consecutive_cos_closed
    )


def test_sine_product_identity():
    rng = random.Random(11)
    for _ in range(30):
        theta = rng.uniform(0.0, math.pi)
        n = rng.randint(1, 12)
        lhs, rhs = sine_product_identity(theta, n)
        assert abs(lhs - rhs) <= 1e-9


# ---------------------------------------------------------------------------
# Walk determinant / rank from eigenpairs
# ---------------------------------------------------------------------------


def test_via_eigen_small_odd_path():
    det, rank = walk_det_and_rank_via_eigen(
        [[1, 1], [2, 2]], [0.0, 3.0], [(-2.0, 1.0), (1.0, 1.0)]
    )
    assert det == pytest.approx(2.0)
    assert rank == 2


def test_via_eigen_diagonal():
    det, rank = walk_det_and_rank_via_eigen(
        [[1, 0], [0, 2]], [1.0, 2.0], [(1.0, 0.0), (0.0, 1.0)]
    )
    assert det == pytest.approx(1.0)
    assert rank == 2


def test_via_eigen_even_path_gives_power_of_two():
    base = reduced_walk_base(4)
    pairs = path_eigenpairs(4)
    det, rank = walk_det_and_rank_via_eigen(
        base.to_rows(), [p.eigenvalue for p in pairs], [p.vector for p in pairs]
    )
    assert det == pytest.approx(2.0)
    assert rank == 2


def test_via_eigen_rejects_singular_basis():
    with pytest.raises(ValueError, match="singular"):
        walk_det_and_rank_via_eigen(
            [[1, 0], [0, 2]], [1.0, 2.0], [(1.0, 1.0), (2.0, 2.0)]
        )


def test_via_eigen_rejects_repeated_eigenvalues():
    with pytest.raises(ValueError, match="distinct"):
        walk_det_and_rank_via_eigen(
            [[1, 0], [0, 1]], [1.0, 1.0], [(1.0, 0.0), (0.0, 1.0)]
        )


def test_via_eigen_dimension_checks():
    with pytest.raises(ValueError):
        walk_det_and_rank_via_eigen([[1, 0]], [1.0], [(1.0,)])
    with pytest.raises(ValueError):
        walk_det_and_rank_via_eigen([[1, 0], [0, 1]], [1.0], [(1.0, 0.0)])


def test_zero_eigenvalue_still_counts_when_dot_nonzero():
    # Odd paths have a genuine zero eigenvalue whose vector dots to +-1, so
    # the counting formula keeps full rank.
    pairs = path_eigenpairs(9)
    assert pairs[0].eigenvalue == 0.0
    base = reduced_walk_base(9)
    _, rank = walk_det_and_rank_via_eigen(
        base.to_rows(), [p.eigenvalue for p in pairs], [p.vector for p in pairs]
    )
    assert rank == 5 == rank_exact(walk_matrix(base).matrix)


@pytest.mark.parametrize("n", range(1, 25))
def test_via_eigen_agrees_with_exact(n):
    base = reduced_walk_base(n)
    pairs = path_eigenpairs(n)
    det, rank = walk_det_and_rank_via_eigen(
        base.to_rows(), [p.eigenvalue for p in pairs], [p.vector for p in pairs]
    )
    exact = det_exact(walk_matrix(base).matrix)
    assert rank == rank_exact(walk_matrix(base).matrix)
    assert abs(det - exact) <= 1e-6 * abs(exact)
