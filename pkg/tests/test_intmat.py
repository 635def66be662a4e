import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qwalk.intmat import (
    IntMatrix,
    MatrixParseError,
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

from fixtures import WALK_Q_PATH3, WALK_Q_PATH10

W3 = IntMatrix.from_rows(WALK_Q_PATH3)
W10 = IntMatrix.from_rows(WALK_Q_PATH10)


def small_matrices(max_dim=5, max_entry=9):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.integers(-max_entry, max_entry), min_size=r * c, max_size=r * c
            ).map(lambda ent: IntMatrix(r, c, tuple(ent)))
        )
    )


# ---------------------------------------------------------------------------
# Construction and accessors
# ---------------------------------------------------------------------------


def test_from_rows_roundtrip():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert (m.rows, m.cols) == (2, 2)
    assert m.to_rows() == [[1, 2], [3, 4]]
    assert m.at(1, 0) == 3
    assert m.row(0) == (1, 2)
    assert m.column(1) == (2, 4)


def test_construction_validation():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(ValueError):
        IntMatrix(-1, 0, ())
    with pytest.raises(TypeError):
        IntMatrix(1, 1, (1.5,))
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_empty_matrix_is_legal():
    m = IntMatrix.zeros(0, 0)
    assert rank_exact(m) == 0
    assert det_exact(m) == 1
    snf = smith_normal_form(m)
    assert (snf.rank, snf.invariant_factors) == (0, ())


def test_transpose_and_submatrix():
    m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.transpose().to_rows() == [[1, 4], [2, 5], [3, 6]]
    assert m.submatrix([0, 1], [0, 2]).to_rows() == [[1, 3], [4, 6]]
    assert m.leading_submatrix(2).to_rows() == [[1, 2], [4, 5]]


# ---------------------------------------------------------------------------
# Multiplication
# ---------------------------------------------------------------------------


def test_identity_times_identity():
    i3 = IntMatrix.identity(3)
    assert mat_mul(i3, i3) == i3


def test_signless_laplacian_times_ones():
    q3 = IntMatrix.from_rows([[1, 1, 0], [1, 2, 1], [0, 1, 1]])
    assert mat_mul(q3, ones_column(3)).to_rows() == [[2], [4], [2]]


def test_zero_annihilates():
    m = IntMatrix.from_rows([[3, -1], [7, 2]])
    z = IntMatrix.zeros(2, 2)
    assert mat_mul(m, z) == z


def test_mul_dimension_mismatch():
    with pytest.raises(ValueError):
        mat_mul(IntMatrix.identity(2), IntMatrix.identity(3))


def test_matmul_operator_and_add():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert (a @ IntMatrix.identity(2)) == a
    assert (a + a).to_rows() == [[2, 4], [6, 8]]


# ---------------------------------------------------------------------------
# Rank and determinant
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_rank_identity(n):
    assert rank_exact(IntMatrix.identity(n)) == n


def test_rank_golden_walk_matrices():
    assert rank_exact(W3) == 2
    assert rank_exact(W10) == 5


def test_det_identity():
    assert det_exact(IntMatrix.identity(4)) == 1


def test_det_reduced_block():
    assert det_exact(IntMatrix.from_rows([[1, 2], [1, 4]])) == 2


def test_det_swap():
    assert det_exact(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1


def test_det_requires_square():
    with pytest.raises(ValueError):
        det_exact(IntMatrix.zeros(2, 3))


def test_det_huge_entries_exact():
    big = 10**40
    m = IntMatrix.from_rows([[big, 1], [1, big]])
    assert det_exact(m) == big * big - 1


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


def test_snf_golden_walk_matrix():
    snf = smith_normal_form(W3)
    assert (snf.rank, snf.invariant_factors) == (2, (1, 2))


def test_snf_identity():
    snf = smith_normal_form(IntMatrix.identity(4))
    assert snf.invariant_factors == (1, 1, 1, 1)


def test_snf_proportional_rows():
    snf = smith_normal_form(IntMatrix.from_rows([[2, 4], [4, 8]]))
    assert (snf.rank, snf.invariant_factors) == (1, (2,))


def test_snf_zero_matrix():
    snf = smith_normal_form(IntMatrix.zeros(3, 3))
    assert (snf.rank, snf.invariant_factors) == (0, ())


def test_snf_with_divisors_cross_checks():
    snf = smith_normal_form(W3, with_divisors=True)
    assert snf.determinant_divisors == (1, 2)


def test_snf_with_divisors_skipped_above_cap():
    snf = smith_normal_form(W10, with_divisors=True)
    assert snf.determinant_divisors is None
    assert snf.invariant_factors == (1, 2, 2, 2, 2)


def test_snf_result_diagonal_matrix():
    snf = smith_normal_form(W3)
    assert snf.diagonal_matrix(3, 3).to_rows() == [[1, 0, 0], [0, 2, 0], [0, 0, 0]]


def test_smith_decomposition_witnesses():
    rng = random.Random(7)
    for _ in range(25):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = IntMatrix(r, c, tuple(rng.randint(-9, 9) for _ in range(r * c)))
        dec = smith_decomposition(m)
        assert abs(det_exact(dec.left)) == 1
        assert abs(det_exact(dec.right)) == 1
        product = dec.left @ m @ dec.right
        assert product == dec.result.diagonal_matrix(r, c)


# ---------------------------------------------------------------------------
# Determinant divisors
# ---------------------------------------------------------------------------


def test_divisors_of_golden_matrix():
    assert determinant_divisor(W3, 1) == 1
    assert determinant_divisor(W3, 2) == 2
    assert determinant_divisor(W3, 3) == 0


@pytest.mark.parametrize("i", [1, 2, 3])
def test_divisors_of_identity(i):
    assert determinant_divisor(IntMatrix.identity(3), i) == 1


def test_divisor_order_out_of_range():
    with pytest.raises(ValueError):
        determinant_divisor(W3, 0)
    with pytest.raises(ValueError):
        determinant_divisor(W3, 4)


def test_divisor_cap_enforced():
    big = IntMatrix.identity(7)
    with pytest.raises(ValueError):
        determinant_divisor(big, 1)
    assert determinant_divisor(big, 1, minor_cap=None) == 1


def test_factors_from_divisors():
    assert invariant_factors_from_divisors([1, 2]) == (1, 2)
    assert invariant_factors_from_divisors([1, 1, 1]) == (1, 1, 1)
    assert invariant_factors_from_divisors([2, 8]) == (2, 4)
    assert invariant_factors_from_divisors([]) == ()


def test_factors_from_divisors_rejects_bad_input():
    with pytest.raises(ValueError):
        invariant_factors_from_divisors([2, 3])
    with pytest.raises(ValueError):
        invariant_factors_from_divisors([0])
    with pytest.raises(ValueError):
        invariant_factors_from_divisors([-2])


# ---------------------------------------------------------------------------
# Properties
# ---------------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(small_matrices(), st.randoms(use_true_random=False))
def test_snf_invariant_under_unimodular_ops(m, rng):
    base = smith_normal_form(m)
    rows = m.to_rows()
    # Random row/column permutations plus add-multiple operations.
    rng.shuffle(rows)
    cols = list(range(m.cols))
    rng.shuffle(cols)
    rows = [[row[j] for j in cols] for row in rows]
    for _ in range(4):
        i, j = rng.randrange(m.rows), rng.randrange(m.rows)
        if i != j:
            k = rng.randint(-3, 3)
            rows[i] = [x + k * y for x, y in zip(rows[i], rows[j])]
    scrambled = smith_normal_form(IntMatrix.from_rows(rows))
    assert scrambled == base


@settings(max_examples=80, deadline=None)
@given(small_matrices(max_dim=5))
def test_snf_matches_minor_enumeration(m):
    a = smith_normal_form(m)
    b = smith_normal_form_by_minors(m)
    assert (a.rank, a.invariant_factors) == (b.rank, b.invariant_factors)


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_factor_chain_and_rank_agreement(m):
    snf = smith_normal_form(m)
    for a, b in zip(snf.invariant_factors, snf.invariant_factors[1:]):
        assert b % a == 0
    assert all(d > 0 for d in snf.invariant_factors)
    assert rank_exact(m) == snf.rank


@settings(max_examples=60, deadline=None)
@given(small_matrices(max_dim=4))
def test_det_is_product_of_factors_up_to_sign(m):
    if not m.is_square:
        return
    d = det_exact(m)
    snf = smith_normal_form(m)
    if d == 0:
        assert snf.rank < m.rows
    else:
        prod = 1
        for f in snf.invariant_factors:
            prod *= f
        assert abs(d) == prod


# ---------------------------------------------------------------------------
# Text and JSON formats
# ---------------------------------------------------------------------------


def test_text_roundtrip():
    text = format_matrix_text(W10)
    assert text.splitlines()[0] == "10 10"
    assert parse_matrix_text(text) == W10


def test_text_roundtrip_big_entries():
    m = IntMatrix.from_rows([[10**50, -(10**50)], [0, 1]])
    assert parse_matrix_text(format_matrix_text(m)) == m


def test_text_parse_errors_carry_line_numbers():
    with pytest.raises(MatrixParseError) as exc:
        parse_matrix_text("2 2\n1 2\n3\n")
    assert exc.value.line == 3
    with pytest.raises(MatrixParseError) as exc:
        parse_matrix_text("2 2\n1 2\n3 x\n")
    assert exc.value.line == 3
    with pytest.raises(MatrixParseError) as exc:
        parse_matrix_text("nonsense\n")
    assert exc.value.line == 1
    with pytest.raises(MatrixParseError):
        parse_matrix_text("")


def test_json_roundtrip():
    text = matrix_to_json(W3)
    assert matrix_from_json(text) == W3
    m = IntMatrix.from_rows([[10**60]])
    assert matrix_from_json(matrix_to_json(m)) == m


def test_json_entries_are_decimal_strings():
    import json

    obj = json.loads(matrix_to_json(W3))
    assert obj["rows"] == 3 and obj["cols"] == 3
    assert obj["entries"][0] == "1" and all(isinstance(e, str) for e in obj["entries"])


def test_json_malformed():
    with pytest.raises(ValueError):
        matrix_from_json('{"rows": 2}')
