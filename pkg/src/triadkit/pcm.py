"""Pairwise comparison matrices with exact rational entries.

Only the strict upper triangle is stored; the diagonal is 1 and the lower
triangle is the exact reciprocal by construction, so reciprocity can never
drift. Floating point enters only when a matrix is handed to an eigensolve.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError

MIN_ORDER = 3
MAX_ORDER = 15

#: Saaty's Fundamental Scale: 1..9 and reciprocals.
SCALE_VALUES = tuple(
    sorted([Fraction(1, k) for k in range(2, 10)] + [Fraction(k) for k in range(1, 10)])
)

RECIPROCITY_RTOL = 1e-4
DIAGONAL_ATOL = 1e-9


def _upper_size(n: int) -> int:
    return n * (n - 1) // 2


def _upper_index(n: int, i: int, j: int) -> int:
    # row-major position of (i, j), i < j, within the strict upper triangle
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def _coerce_cell(value) -> Fraction:
    """Parse a matrix cell: Fraction, int, float, or a string like '1/7' or '0.5'."""
    if isinstance(value, Fraction):
        f = value
    elif isinstance(value, bool):
        raise ValidationError(f"matrix cell {value!r} is not a number")
    elif isinstance(value, int):
        f = Fraction(value)
    elif isinstance(value, float):
        f = Fraction(value)
    elif isinstance(value, str):
        try:
            f = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"malformed matrix cell {value!r}") from exc
    else:
        raise ValidationError(f"matrix cell {value!r} has unsupported type")
    if f <= 0:
        raise ValidationError(f"matrix cell {value!r} is not strictly positive")
    return f


@dataclass(frozen=True)
class PCM:
    """Positive reciprocal pairwise comparison matrix of order 3..15."""

    order: int
    upper: tuple[Fraction, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = self.order
        if not (MIN_ORDER <= n <= MAX_ORDER):
            raise ValidationError(f"order {n} outside supported range {MIN_ORDER}..{MAX_ORDER}")
        if len(self.upper) != _upper_size(n):
            raise ValidationError(
                f"expected {_upper_size(n)} upper-triangle entries for order {n}, got {len(self.upper)}"
            )
        for x in self.upper:
            if not isinstance(x, Fraction) or x <= 0:
                raise ValidationError(f"upper-triangle entry {x!r} is not a positive rational")
        if self.labels is not None and len(self.labels) != n:
            raise ValidationError(f"expected {n} labels, got {len(self.labels)}")

    # -- construction -------------------------------------------------

    @classmethod
    def from_upper(cls, order: int, upper: Iterable, labels: Sequence[str] | None = None) -> "PCM":
        ups = tuple(_coerce_cell(x) for x in upper)
        return cls(order, ups, tuple(labels) if labels is not None else None)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence], labels: Sequence[str] | None = None) -> "PCM":
        """Build from a full square matrix, validating diagonal and reciprocity.

        The lower triangle is checked against 1/upper within a relative
        tolerance and then discarded; the stored matrix is exactly reciprocal.
        """
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValidationError("matrix is not square")
        if not (MIN_ORDER <= n <= MAX_ORDER):
            raise ValidationError(f"order {n} outside supported range {MIN_ORDER}..{MAX_ORDER}")
        cells = [[_coerce_cell(x) for x in r] for r in rows]
        for i in range(n):
            if abs(float(cells[i][i]) - 1.0) > DIAGONAL_ATOL:
                raise ValidationError(f"diagonal entry ({i},{i}) = {cells[i][i]} is not 1")
        upper = []
        for i in range(n):
            for j in range(i + 1, n):
                expect = 1 / cells[i][j]
                got = cells[j][i]
                if abs(float(got / expect) - 1.0) > RECIPROCITY_RTOL:
                    raise ValidationError(
                        f"reciprocity violated at ({j},{i}): {got} vs 1/{cells[i][j]}"
                    )
                upper.append(cells[i][j])
        return cls(n, tuple(upper), tuple(labels) if labels is not None else None)

    @classmethod
    def from_priority_vector(cls, weights: Sequence, labels: Sequence[str] | None = None) -> "PCM":
        """Perfectly consistent matrix a_ij = w_i / w_j (exact rationals)."""
        ws = [_coerce_cell(w) for w in weights]
        n = len(ws)
        upper = [ws[i] / ws[j] for i in range(n) for j in range(i + 1, n)]
        return cls.from_upper(n, upper, labels)

    # -- element access -----------------------------------------------

    def entry(self, i: int, j: int) -> Fraction:
        n = self.order
        if not (0 <= i < n and 0 <= j < n):
            raise ValidationError(f"index ({i},{j}) outside order-{n} matrix")
        if i == j:
            return Fraction(1)
        if i < j:
            return self.upper[_upper_index(n, i, j)]
        return 1 / self.upper[_upper_index(n, j, i)]

    def with_entry(self, i: int, j: int, value) -> "PCM":
        """New PCM with entry (i,j) replaced (reciprocal kept exact)."""
        if i == j:
            raise ValidationError("diagonal entries are fixed at 1")
        v = _coerce_cell(value)
        if i > j:
            i, j = j, i
            v = 1 / v
        ups = list(self.upper)
        ups[_upper_index(self.order, i, j)] = v
        return PCM(self.order, tuple(ups), self.labels)

    def rows(self) -> list[list[Fraction]]:
        n = self.order
        return [[self.entry(i, j) for j in range(n)] for i in range(n)]

    def as_float_array(self) -> np.ndarray:
        n = self.order
        a = np.ones((n, n))
        for i in range(n):
            for j in range(i + 1, n):
                x = float(self.upper[_upper_index(n, i, j)])
                a[i, j] = x
                a[j, i] = 1.0 / x
        return a

    def submatrix(self, indices: Sequence[int]) -> "PCM":
        idx = list(indices)
        upper = [self.entry(idx[a], idx[b]) for a in range(len(idx)) for b in range(a + 1, len(idx))]
        labs = tuple(self.labels[t] for t in idx) if self.labels else None
        return PCM(len(idx), tuple(upper), labs)

    def permuted(self, perm: Sequence[int]) -> "PCM":
        """Relabel alternatives: new position t holds old alternative perm[t]."""
        if sorted(perm) != list(range(self.order)):
            raise ValidationError("not a permutation of 0..n-1")
        return self.submatrix(perm)

    def is_consistent(self) -> bool:
        """Exact transitivity check: a_ij * a_jk == a_ik for all triples."""
        for i, j, k in combinations(range(self.order), 3):
            if self.entry(i, j) * self.entry(j, k) != self.entry(i, k):
                return False
        return True

    def uses_fundamental_scale(self) -> bool:
        return all(x in SCALE_VALUES for x in self.upper)

    # -- serialization ------------------------------------------------

    def to_json_dict(self) -> dict:
        out: dict = {"schema": 1, "matrix": [[format_cell(x) for x in row] for row in self.rows()]}
        if self.labels:
            out["labels"] = list(self.labels)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        for row in self.rows():
            writer.writerow([format_cell(x) for x in row])
        return buf.getvalue()


def format_cell(x: Fraction):
    """Integers as ints, anything else as an exact 'p/q' string."""
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


def parse_pcm(text: str, format: str = "csv") -> PCM:
    """Parse matrix text as CSV or JSON into a PCM."""
    if format == "csv":
        rows = [row for row in csv.reader(io.StringIO(text)) if row]
        if not rows:
            raise ValidationError("empty matrix text")
        return PCM.from_matrix(rows)
    if format == "json":
        try:
            # parse_float=Fraction keeps decimal literals exact
            data = json.loads(text, parse_float=Fraction)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON: {exc}") from exc
        return pcm_from_json_dict(data)
    raise ValidationError(f"unknown matrix format {format!r}")


def pcm_from_json_dict(data) -> PCM:
    if not isinstance(data, dict) or "matrix" not in data:
        raise ValidationError('matrix JSON must be an object with a "matrix" field')
    labels = data.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or not all(isinstance(x, str) for x in labels)
    ):
        raise ValidationError('"labels" must be a list of strings')
    matrix = data["matrix"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise ValidationError('"matrix" must be a list of rows')
    return PCM.from_matrix(matrix, labels)


def load_pcm(path: str) -> PCM:
    """Read a PCM file; format inferred from extension (.json else CSV)."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    fmt = "json" if path.lower().endswith(".json") else "csv"
    return parse_pcm(text, fmt)
