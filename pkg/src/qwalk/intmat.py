"""Dense integer matrices with exact rank, determinant, and Smith normal form.

Entries are Python ints, so nothing ever overflows or rounds: every rank,
determinant, and invariant factor computed here is exact no matter how large
the entries grow.  Rank and determinant use fraction-free (Bareiss)
elimination; the Smith normal form uses unimodular row/column elimination
with a smallest-pivot rule.  A brute-force route through determinant
divisors (gcds of all k x k minors) is provided as an independent
cross-check for small matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Sequence

__all__ = [
    "IntMatrix",
    "SnfResult",
    "SmithDecomposition",
    "MatrixParseError",
    "mat_mul",
    "ones_column",
    "rank_exact",
    "det_exact",
    "smith_normal_form",
    "smith_decomposition",
    "smith_normal_form_by_minors",
    "determinant_divisor",
    "invariant_factors_from_divisors",
    "format_matrix_text",
    "parse_matrix_text",
    "matrix_to_json_dict",
    "matrix_from_json_dict",
    "matrix_to_json",
    "matrix_from_json",
]

# Enumerating all k x k minors is combinatorial; refuse by default above this.
DEFAULT_MINOR_CAP = 6


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers, row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        for e in self.entries:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"matrix entries must be ints, got {type(e).__name__}")

    @classmethod
    def from_rows(cls, rows_data: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = len(rows_data)
        cols = len(rows_data[0]) if rows else 0
        for i, row in enumerate(rows_data):
            if len(row) != cols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {cols}")
        flat = tuple(int(x) for row in rows_data for x in row)
        return cls(rows, cols, flat)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(
            n, n, tuple(int(values[i]) if i == j else 0 for i in range(n) for j in range(n))
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def at(self, i: int, j: int) -> int:
        """Entry at 0-based position (i, j)."""
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def leading_submatrix(self, k: int) -> "IntMatrix":
        """Leading principal k x k submatrix."""
        if not (0 <= k <= min(self.rows, self.cols)):
            raise ValueError(f"k={k} out of range for {self.rows}x{self.cols}")
        return IntMatrix(
            k, k, tuple(self.entries[i * self.cols + j] for i in range(k) for j in range(k))
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix(
            len(row_idx),
            len(col_idx),
            tuple(self.entries[i * self.cols + j] for i in row_idx for j in col_idx),
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(
                f"cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )
        return IntMatrix(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return mat_mul(self, other)

    def __str__(self) -> str:
        return format_matrix_text(self).rstrip("\n")


def ones_column(n: int) -> IntMatrix:
    """The all-ones vector of dimension n, as an n x 1 matrix."""
    return IntMatrix(n, 1, (1,) * n)


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    b_cols = [b.column(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        ra = a.row(i)
        for cb in b_cols:
            out.append(sum(x * y for x, y in zip(ra, cb)))
    return IntMatrix(a.rows, b.cols, tuple(out))


def _to_lists(m: IntMatrix) -> list[list[int]]:
    return m.to_rows()


def rank_exact(m: IntMatrix) -> int:
    """Rank over the rationals, by fraction-free elimination on exact ints."""
    a = _to_lists(m)
    nrows, ncols = m.rows, m.cols
    rank = 0
    prev = 1
    for t in range(min(nrows, ncols)):
        # Full pivot search: any nonzero entry of the trailing submatrix.
        pr = pc = -1
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j]:
                    pr, pc = i, j
                    break
            if pr >= 0:
                break
        if pr < 0:
            break
        if pr != t:
            a[t], a[pr] = a[pr], a[t]
        if pc != t:
            for row in a:
                row[t], row[pc] = row[pc], row[t]
        rank += 1
        piv = a[t][t]
        for i in range(t + 1, nrows):
            ait = a[i][t]
            row_i, row_t = a[i], a[t]
            for j in range(t + 1, ncols):
                row_i[j] = (piv * row_i[j] - ait * row_t[j]) // prev
            row_i[t] = 0
        prev = piv
    return rank


def det_exact(m: IntMatrix) -> int:
    """Exact determinant via fraction-free elimination.  Square input only."""
    if not m.is_square:
        raise ValueError(f"determinant requires a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return 1
    a = _to_lists(m)
    sign = 1
    prev = 1
    for t in range(n - 1):
        pr = -1
        for i in range(t, n):
            if a[i][t]:
                pr = i
                break
        if pr < 0:
            return 0
        if pr != t:
            a[t], a[pr] = a[pr], a[t]
            sign = -sign
        piv = a[t][t]
        for i in range(t + 1, n):
            ait = a[i][t]
            row_i, row_t = a[i], a[t]
            for j in range(t + 1, n):
                row_i[j] = (piv * row_i[j] - ait * row_t[j]) // prev
            row_i[t] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.

    ``determinant_divisors``, when present, holds the gcds D(1)..D(r) of all
    k x k minors; the factors satisfy d_k = D(k)/D(k-1) with D(0) = 1.
    """

    rank: int
    invariant_factors: tuple[int, ...]
    determinant_divisors: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.rank != len(self.invariant_factors):
            raise ValueError("rank must equal the number of invariant factors")
        for d in self.invariant_factors:
            if d <= 0:
                raise ValueError("invariant factors must be positive")
        for da, db in zip(self.invariant_factors, self.invariant_factors[1:]):
            if db % da != 0:
                raise ValueError(f"invariant factor {da} does not divide {db}")

    def diagonal_matrix(self, rows: int, cols: int) -> IntMatrix:
        """The rows x cols diagonal matrix diag(d_1, ..., d_r, 0, ..., 0)."""
        if self.rank > min(rows, cols):
            raise ValueError("rank exceeds requested dimensions")
        entries = [0] * (rows * cols)
        for i, d in enumerate(self.invariant_factors):
            entries[i * cols + i] = d
        return IntMatrix(rows, cols, tuple(entries))


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular U, V with U @ m @ V equal to the Smith normal form of m."""

    left: IntMatrix
    right: IntMatrix
    result: SnfResult


def _snf_eliminate(
    m: IntMatrix, track: bool
) -> tuple[list[int], IntMatrix | None, IntMatrix | None]:
    """Drive m to diagonal form by unimodular row/column operations.

    Pivot rule: the nonzero entry of smallest absolute value in the trailing
    submatrix, ties broken by lowest (row, col).  Before advancing, the pivot
    is made to divide every remaining entry, so the diagonal comes out
    already in divisibility order.
    """
    a = _to_lists(m)
    nrows, ncols = m.rows, m.cols
    u = IntMatrix.identity(nrows).to_rows() if track else None
    v = IntMatrix.identity(ncols).to_rows() if track else None
    factors: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        # Smallest-magnitude nonzero pivot in the trailing submatrix.
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                e = a[i][j]
                if e and (best is None or abs(e) < best[0]):
                    best = (abs(e), i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            if u is not None:
                u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            if v is not None:
                for row in v:
                    row[t], row[pj] = row[pj], row[t]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]

        piv = a[t][t]
        # Reduce column t and row t modulo the pivot.  Any nonzero remainder
        # is strictly smaller than the pivot, so reselecting terminates.
        clean = True
        for i in range(t + 1, nrows):
            if a[i][t]:
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if u is not None:
                        u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                if a[i][t]:
                    clean = False
        for j in range(t + 1, ncols):
            if a[t][j]:
                q = a[t][j] // piv
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                    if v is not None:
                        for row in v:
                            row[j] -= q * row[t]
                if a[t][j]:
                    clean = False
        if not clean:
            continue
        # Pivot must divide the rest of the submatrix or the next factor
        # would not be a multiple of this one; drag an offender into row t.
        offender = None
        for i in range(t + 1, nrows):
            row_i = a[i]
            for j in range(t + 1, ncols):
                if row_i[j] % piv:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            if u is not None:
                u[t] = [x + y for x, y in zip(u[t], u[offender])]
            continue
        factors.append(piv)
        t += 1
    left = IntMatrix.from_rows(u) if u is not None else None
    right = IntMatrix.from_rows(v) if v is not None else None
    return factors, left, right


def smith_normal_form(
    m: IntMatrix, with_divisors: bool = False, minor_cap: int = DEFAULT_MINOR_CAP
) -> SnfResult:
    """Invariant factors of m by unimodular elimination.

    With ``with_divisors`` set and min(rows, cols) <= ``minor_cap``, the
    determinant divisors D(1)..D(r) are also computed by exhaustive minor
    enumeration and cross-checked against the elimination result.
    """
    factors, _, _ = _snf_eliminate(m, track=False)
    divisors: tuple[int, ...] | None = None
    if with_divisors and min(m.rows, m.cols) <= minor_cap:
        by_minors = smith_normal_form_by_minors(m, minor_cap=minor_cap)
        if by_minors.invariant_factors != tuple(factors):
            raise RuntimeError(
                "elimination and minor-enumeration Smith forms disagree: "
                f"{tuple(factors)} vs {by_minors.invariant_factors}"
            )
        divisors = by_minors.determinant_divisors
    return SnfResult(len(factors), tuple(factors), divisors)


def smith_decomposition(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form together with witnessing unimodular transforms."""
    factors, left, right = _snf_eliminate(m, track=True)
    assert left is not None and right is not None
    return SmithDecomposition(left, right, SnfResult(len(factors), tuple(factors)))


def determinant_divisor(
    m: IntMatrix, order: int, minor_cap: int | None = DEFAULT_MINOR_CAP
) -> int:
    """gcd of all order x order minors of m, by exhaustive enumeration.

    Returns 0 when every minor of that order vanishes.  The cost is
    combinatorial in min(rows, cols); ``minor_cap`` (None disables) refuses
    matrices too large to enumerate.
    """
    small = min(m.rows, m.cols)
    if not (1 <= order <= small):
        raise ValueError(f"minor order {order} out of range 1..{small}")
    if minor_cap is not None and small > minor_cap:
        raise ValueError(
            f"minor enumeration refused for min-dimension {small} > cap {minor_cap}"
        )
    g = 0
    for row_idx in combinations(range(m.rows), order):
        for col_idx in combinations(range(m.cols), order):
            g = gcd(g, det_exact(m.submatrix(row_idx, col_idx)))
            if g == 1:
                return 1
    return g


def smith_normal_form_by_minors(
    m: IntMatrix, minor_cap: int | None = DEFAULT_MINOR_CAP
) -> SnfResult:
    """Smith normal form reconstructed purely from determinant divisors.

    Independent of the elimination route: computes D(1), D(2), ... until a
    zero divisor (all minors of that order vanish) and takes successive
    quotients.  Intended as an oracle for small matrices.
    """
    divisors: list[int] = []
    for order in range(1, min(m.rows, m.cols) + 1):
        d = determinant_divisor(m, order, minor_cap=minor_cap)
        if d == 0:
            break
        divisors.append(d)
    factors = invariant_factors_from_divisors(divisors)
    return SnfResult(len(factors), factors, tuple(divisors))


def invariant_factors_from_divisors(divisors: Sequence[int]) -> tuple[int, ...]:
    """Successive quotients d_k = D(k)/D(k-1), with D(0) = 1.

    Input must be the maximal prefix of nonzero determinant divisors; a
    non-divisibility here signals a computation bug upstream, never valid
    data, so it raises.
    """
    factors = []
    prev = 1
    for k, d in enumerate(divisors, start=1):
        if d <= 0:
            raise ValueError(f"determinant divisor D({k}) = {d} must be positive")
        if d % prev:
            raise ValueError(f"D({k}) = {d} is not divisible by D({k - 1}) = {prev}")
        factors.append(d // prev)
        prev = d
    return tuple(factors)


# ---------------------------------------------------------------------------
# Text and JSON interchange
# ---------------------------------------------------------------------------


class MatrixParseError(ValueError):
    """Malformed matrix input; ``line`` is the offending 1-based line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def format_matrix_text(m: IntMatrix) -> str:
    """Render: first line "rows cols", then one whitespace-separated row per line."""
    lines = [f"{m.rows} {m.cols}"]
    for i in range(m.rows):
        lines.append(" ".join(str(x) for x in m.row(i)))
    return "\n".join(lines) + "\n"


def parse_matrix_text(text: str) -> IntMatrix:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise MatrixParseError("missing 'rows cols' header", 1)
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixParseError(f"header must be 'rows cols', got {lines[0]!r}", 1)
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError:
        raise MatrixParseError(f"header must be two integers, got {lines[0]!r}", 1) from None
    if rows < 0 or cols < 0:
        raise MatrixParseError("dimensions must be non-negative", 1)
    if len(lines) < 1 + rows:
        raise MatrixParseError(f"expected {rows} row lines, found {len(lines) - 1}", len(lines))
    entries: list[int] = []
    for i in range(rows):
        lineno = i + 2
        parts = lines[1 + i].split()
        if len(parts) != cols:
            raise MatrixParseError(f"expected {cols} entries, found {len(parts)}", lineno)
        for p in parts:
            try:
                entries.append(int(p))
            except ValueError:
                raise MatrixParseError(f"invalid integer {p!r}", lineno) from None
    for extra, line in enumerate(lines[1 + rows :], start=rows + 2):
        if line.strip():
            raise MatrixParseError(f"unexpected extra content {line!r}", extra)
    return IntMatrix(rows, cols, tuple(entries))


def matrix_to_json_dict(m: IntMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [str(x) for x in m.entries]}


def matrix_from_json_dict(obj: dict) -> IntMatrix:
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        entries = tuple(int(e) for e in obj["entries"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from None
    return IntMatrix(rows, cols, entries)


def matrix_to_json(m: IntMatrix) -> str:
    return json.dumps(matrix_to_json_dict(m))


def matrix_from_json(text: str) -> IntMatrix:
    return matrix_from_json_dict(json.loads(text))
