"""End-to-end cross-checks of the closed-form claims against exact arithmetic.

For each n the exact Q-walk matrix of the path is built and its rank, Smith
normal form, and reduced determinant are compared with the predicted
formulas; the reduction-through-quotient identity, the row mirror symmetry,
and the eigenpair residuals are checked alongside.  Failures are recorded,
never thrown, so a full report always comes back.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass

from .closedform import (
    eigen_check,
    predicted_rank,
    predicted_reduced_det,
    predicted_snf,
)
from .graphs import dynkin_a
from .intmat import (
    IntMatrix,
    det_exact,
    rank_exact,
    smith_normal_form,
    smith_normal_form_by_minors,
)
from .walks import q_walk_matrix, reduced_q_walk_matrix, reduced_walk_base, walk_matrix

__all__ = [
    "VerifyOptions",
    "CheckRecord",
    "VerificationReport",
    "FuzzResult",
    "verify_range",
    "oracle_snf_fuzz",
    "report_to_json",
    "report_from_json",
    "report_to_csv",
]


@dataclass(frozen=True)
class VerifyOptions:
    """Caps keep the expensive checks inside comfortable runtimes.

    The Smith normal form is skipped (recorded as None) for n above
    ``snf_cap``; eigen residuals are skipped above ``eigen_cap``.  ``None``
    disables a cap.
    """

    snf_cap: int | None = 40
    eigen_cap: int | None = 128
    eigen_tol: float = 1e-8


@dataclass(frozen=True)
class CheckRecord:
    """All checks for one n; ``None`` means a check was skipped by a cap."""

    n: int
    r: int
    exact_rank: int
    predicted_rank: int
    rank_ok: bool
    exact_factors: tuple[int, ...] | None
    predicted_factors: tuple[int, ...]
    snf_ok: bool | None
    reduced_det: int
    predicted_det: int
    det_ok: bool
    reduction_ok: bool
    symmetry_ok: bool
    eigen_max_residual: float | None
    eigen_ok: bool | None
    elapsed_s: float

    @property
    def all_ok(self) -> bool:
        for flag in (self.rank_ok, self.snf_ok, self.det_ok, self.reduction_ok,
                     self.symmetry_ok, self.eigen_ok):
            if flag is False:
                return False
        return True


@dataclass(frozen=True)
class VerificationReport:
    n_min: int
    n_max: int
    records: tuple[CheckRecord, ...]

    @property
    def all_ok(self) -> bool:
        return all(rec.all_ok for rec in self.records)

    def failures(self) -> list[CheckRecord]:
        return [rec for rec in self.records if not rec.all_ok]


def _row_symmetric(m: IntMatrix) -> bool:
    return all(m.row(i) == m.row(m.rows - 1 - i) for i in range(m.rows // 2 + 1))


def _check_one(n: int, opts: VerifyOptions) -> CheckRecord:
    start = time.perf_counter()
    r = predicted_rank(n)
    walk = q_walk_matrix(dynkin_a(n)).matrix

    exact_rank = rank_exact(walk)
    rank_ok = exact_rank == r

    prediction = predicted_snf(n)
    exact_factors: tuple[int, ...] | None = None
    snf_ok: bool | None = None
    if opts.snf_cap is None or n <= opts.snf_cap:
        snf = smith_normal_form(walk)
        exact_factors = snf.invariant_factors
        snf_ok = snf.rank == prediction.rank and exact_factors == prediction.factors

    reduced = reduced_q_walk_matrix(n)
    reduced_det = det_exact(reduced)
    det_ok = reduced_det == predicted_reduced_det(n)

    reduction_ok = reduced == walk_matrix(reduced_walk_base(n)).matrix
    symmetry_ok = _row_symmetric(walk)

    eigen_max_residual: float | None = None
    eigen_ok: bool | None = None
    if opts.eigen_cap is None or n <= opts.eigen_cap:
        eigen_max_residual = max(row.residual for row in eigen_check(n))
        eigen_ok = eigen_max_residual <= opts.eigen_tol

    return CheckRecord(
        n=n,
        r=r,
        exact_rank=exact_rank,
        predicted_rank=r,
        rank_ok=rank_ok,
        exact_factors=exact_factors,
        predicted_factors=prediction.factors,
        snf_ok=snf_ok,
        reduced_det=reduced_det,
        predicted_det=predicted_reduced_det(n),
        det_ok=det_ok,
        reduction_ok=reduction_ok,
        symmetry_ok=symmetry_ok,
        eigen_max_residual=eigen_max_residual,
        eigen_ok=eigen_ok,
        elapsed_s=time.perf_counter() - start,
    )


def verify_range(
    n_min: int, n_max: int, opts: VerifyOptions = VerifyOptions()
) -> VerificationReport:
    """Run every check for each n in [n_min, n_max], in n order."""
    if not (1 <= n_min <= n_max):
        raise ValueError(f"need 1 <= n_min <= n_max, got [{n_min}, {n_max}]")
    records = tuple(_check_one(n, opts) for n in range(n_min, n_max + 1))
    return VerificationReport(n_min=n_min, n_max=n_max, records=records)


# ---------------------------------------------------------------------------
# Randomized cross-check of the two Smith normal form routes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FuzzResult:
    runs: int
    dim: int
    bound: int
    seed: int
    mismatches: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def oracle_snf_fuzz(count: int, dim: int, bound: int, seed: int = 0) -> FuzzResult:
    """Compare elimination against minor-enumeration Smith forms on random
    dim x dim matrices with entries in [-bound, bound].

    Any disagreement is reported with the offending matrix.  dim is limited
    by the minor-enumeration cap (6).
    """
    if dim < 1 or dim > 6:
        raise ValueError(f"fuzz dimension must be in 1..6, got {dim}")
    if bound < 0:
        raise ValueError(f"entry bound must be non-negative, got {bound}")
    rng = random.Random(seed)
    mismatches = []
    for _ in range(count):
        m = IntMatrix(
            dim, dim, tuple(rng.randint(-bound, bound) for _ in range(dim * dim))
        )
        a = smith_normal_form(m)
        b = smith_normal_form_by_minors(m)
        if (a.rank, a.invariant_factors) != (b.rank, b.invariant_factors):
            mismatches.append(tuple(tuple(row) for row in m.to_rows()))
    return FuzzResult(count, dim, bound, seed, tuple(mismatches))


# ---------------------------------------------------------------------------
# Report serialization
# ---------------------------------------------------------------------------

CSV_COLUMNS = ("n", "r", "rank_ok", "snf_ok", "det_ok", "reduction_ok",
               "symmetry_ok", "eigen_max_residual")


def _record_to_dict(rec: CheckRecord) -> dict:
    return {
        "n": rec.n,
        "r": rec.r,
        "exact_rank": rec.exact_rank,
        "predicted_rank": rec.predicted_rank,
        "rank_ok": rec.rank_ok,
        "exact_factors": list(rec.exact_factors) if rec.exact_factors is not None else None,
        "predicted_factors": list(rec.predicted_factors),
        "snf_ok": rec.snf_ok,
        "reduced_det": rec.reduced_det,
        "predicted_det": rec.predicted_det,
        "det_ok": rec.det_ok,
        "reduction_ok": rec.reduction_ok,
        "symmetry_ok": rec.symmetry_ok,
        "eigen_max_residual": rec.eigen_max_residual,
        "eigen_ok": rec.eigen_ok,
        "elapsed_s": rec.elapsed_s,
    }


def _record_from_dict(obj: dict) -> CheckRecord:
    factors = obj["exact_factors"]
    return CheckRecord(
        n=obj["n"],
        r=obj["r"],
        exact_rank=obj["exact_rank"],
        predicted_rank=obj["predicted_rank"],
        rank_ok=obj["rank_ok"],
        exact_factors=tuple(factors) if factors is not None else None,
        predicted_factors=tuple(obj["predicted_factors"]),
        snf_ok=obj["snf_ok"],
        reduced_det=obj["reduced_det"],
        predicted_det=obj["predicted_det"],
        det_ok=obj["det_ok"],
        reduction_ok=obj["reduction_ok"],
        symmetry_ok=obj["symmetry_ok"],
        eigen_max_residual=obj["eigen_max_residual"],
        eigen_ok=obj["eigen_ok"],
        elapsed_s=obj["elapsed_s"],
    )


def report_to_json(report: VerificationReport) -> str:
    obj = {
        "n_min": report.n_min,
        "n_max": report.n_max,
        "records": [_record_to_dict(rec) for rec in report.records],
    }
    return json.dumps(obj, indent=2)


def report_from_json(text: str) -> VerificationReport:
    obj = json.loads(text)
    return VerificationReport(
        n_min=obj["n_min"],
        n_max=obj["n_max"],
        records=tuple(_record_from_dict(rec) for rec in obj["records"]),
    )


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value) if isinstance(value, float) else str(value)


def report_to_csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in report.records:
        writer.writerow(
            [
                _csv_cell(rec.n),
                _csv_cell(rec.r),
                _csv_cell(rec.rank_ok),
                _csv_cell(rec.snf_ok),
                _csv_cell(rec.det_ok),
                _csv_cell(rec.reduction_ok),
                _csv_cell(rec.symmetry_ok),
                _csv_cell(rec.eigen_max_residual),
            ]
        )
    return buf.getvalue()
