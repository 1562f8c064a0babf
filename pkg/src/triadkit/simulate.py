"""Simulation of judgment-like ("logical") PCMs, random PCMs, and
CR-coercion of random PCMs, plus deterministic batch generation.

Determinism contract: every row (order, i) of a batch draws from its own
generator seeded by SeedSequence([seed, order, i]), so any single row can
be regenerated in isolation.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from ._backend import kernels
from .consistency import cr_threshold, random_index
from .errors import NumericalError, ValidationError
from .pcm import MAX_ORDER, MIN_ORDER, PCM, pcm_from_json_dict

#: distance ranking is over the integer scale values 1..9
_SCALE_INTS = np.arange(1.0, 10.0)


@dataclass(frozen=True)
class SimConfig:
    orders: tuple[int, int] = (4, 12)  # inclusive range
    count_per_order: int = 2000
    seed: int = 0
    candidate_pool: int = 5

    def __post_init__(self):
        lo, hi = self.orders
        if not (MIN_ORDER <= lo <= hi <= MAX_ORDER):
            raise ValidationError(f"orders {self.orders} outside {MIN_ORDER}..{MAX_ORDER}")
        if self.count_per_order < 1:
            raise ValidationError("count_per_order must be >= 1")
        if not (2 <= self.candidate_pool <= 9):
            raise ValidationError("candidate_pool must be in 2..9")

    def order_list(self) -> list[int]:
        return list(range(self.orders[0], self.orders[1] + 1))


@dataclass(frozen=True)
class DatasetRow:
    id: int
    order: int
    prop3rev: float
    max3rev: float
    cr: float
    source: str


def row_rng(seed: int, order: int, index: int, stream: int = 0) -> np.random.Generator:
    """Per-row generator; `stream` separates logical/random/coerced draws."""
    key = [seed, order, index] if stream == 0 else [seed, stream, order, index]
    return np.random.default_rng(np.random.SeedSequence(key))


def round_ratio_to_scale(ratio: float, rng: np.random.Generator, pool: int = 5) -> int:
    """Round a consistent ratio > 1 to the judgment scale.

    Ranks 1..9 by |ratio - k| (ties to the smaller k) and picks uniformly
    among the `pool` nearest, modelling imprecise human judgment.
    """
    if ratio <= 1.0:
        raise ValidationError("round_ratio_to_scale expects a ratio > 1")
    dist = np.abs(ratio - _SCALE_INTS)
    ranked = np.argsort(dist, kind="stable")
    return int(_SCALE_INTS[ranked[int(rng.integers(pool))]])


def simulate_logical(n: int, rng: np.random.Generator, candidate_pool: int = 5) -> PCM:
    """Judgment-like PCM: perturbed scale rounding of a consistent matrix.

    Draws a priority vector of n uniforms on (0,1), forms the consistent
    ratios, and replaces each upper-triangle entry by a randomized nearest
    scale value (reciprocal side mirrored exactly).
    """
    if not (MIN_ORDER <= n <= MAX_ORDER):
        raise ValidationError(f"order {n} outside supported range {MIN_ORDER}..{MAX_ORDER}")
    weights = rng.random(n)
    upper: list[Fraction] = []
    for i in range(n):
        for j in range(i + 1, n):
            r = weights[i] / weights[j]
            if r == 1.0:
                upper.append(Fraction(1))
            elif r > 1.0:
                upper.append(Fraction(round_ratio_to_scale(r, rng, candidate_pool)))
            else:
                upper.append(Fraction(1, round_ratio_to_scale(1.0 / r, rng, candidate_pool)))
    return PCM(n, tuple(upper))


def simulate_random(n: int, rng: np.random.Generator) -> PCM:
    """Random PCM: upper-triangle entries uniform over {1/9..1/2, 1, 2..9}."""
    if not (MIN_ORDER <= n <= MAX_ORDER):
        raise ValidationError(f"order {n} outside supported range {MIN_ORDER}..{MAX_ORDER}")
    values = [Fraction(1, k) for k in range(9, 1, -1)] + [Fraction(k) for k in range(1, 10)]
    m = n * (n - 1) // 2
    upper = tuple(values[int(t)] for t in rng.integers(0, 17, size=m))
    return PCM(n, upper)


def harker_coerce(pcm: PCM, cr_threshold_value: float = 0.10, max_iter: int = 1000) -> tuple[PCM, int]:
    """Coerce a PCM to CR <= cr_threshold_value by repeatedly replacing the
    worst-fitting entry with its eigenvector-implied ratio (not snapped to
    the judgment scale).

    Raises NumericalError if the budget runs out or CR fails to decrease
    strictly on any step.
    """
    if cr_threshold_value <= 0:
        raise ValidationError("cr threshold must be positive")
    if max_iter < 1:
        raise ValidationError("max_iter must be >= 1")
    ri = random_index(pcm.order)
    a = pcm.as_float_array()
    edits, trace = kernels.harker_loop(a, cr_threshold_value * ri, max_iter)
    if np.any(np.diff(trace) >= 0):
        raise NumericalError("consistency ratio failed to decrease during coercion")
    if trace[-1] > cr_threshold_value * ri:
        raise NumericalError(
            f"coercion stopped at CR={trace[-1] / ri:.4f} after {edits} edits (budget {max_iter})"
        )
    if edits == 0:
        return pcm, 0
    n = pcm.order
    upper = tuple(Fraction(a[i, j]) for i in range(n) for j in range(i + 1, n))
    return PCM(n, upper, pcm.labels), edits


def features_for(pcm: PCM) -> tuple[float, float, float]:
    """(lambda_max, prop3rev, max3rev) with the exact-consistency guard."""
    a = pcm.as_float_array()
    vec, lam, triads, pairs, frs, trs, mags = kernels.reversal_scan(a)
    n = pcm.order
    count = len(mags)
    if count and lam - n < 1e-9 and pcm.is_consistent():
        # solver tie noise on an exactly consistent matrix; no true reversals
        count = 0
    max_possible = n * (n - 1) * (n - 2) // 2
    prop = count / max_possible
    mx = float(np.max(mags)) if count else 1.0
    return float(lam), prop, mx


def generate_batch(
    config: SimConfig, keep_pcms: bool = False
) -> tuple[list[DatasetRow], list[PCM] | None]:
    """Simulate logical PCMs per the config and compute their features.

    Rows come out ordered by (order, id); archive (when requested) is
    id-aligned.
    """
    rows: list[DatasetRow] = []
    archive: list[PCM] | None = [] if keep_pcms else None
    for order in config.order_list():
        for i in range(config.count_per_order):
            rng = row_rng(config.seed, order, i)
            pcm = simulate_logical(order, rng, config.candidate_pool)
            lam, prop, mx = features_for(pcm)
            cr = (lam - order) / (order - 1) / random_index(order)
            rows.append(DatasetRow(i, order, prop, mx, cr, "logical"))
            if archive is not None:
                archive.append(pcm)
    return rows, archive


def cr_consistent(row: DatasetRow, threshold: float | None = None) -> bool:
    thr = cr_threshold(row.order) if threshold is None else threshold
    return row.cr <= thr


# -- dataset and archive serialization ---------------------------------

CSV_HEADER = ["id", "order", "prop3Rev", "max3Rev", "cr", "source"]


def rows_to_csv(rows: Iterable[DatasetRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.id, r.order, f"{r.prop3rev:.6f}", f"{r.max3rev:.6f}", f"{r.cr:.6f}", r.source])
    return buf.getvalue()


def rows_from_csv(text: str) -> list[DatasetRow]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValidationError("empty dataset CSV") from None
    if [h.strip() for h in header[:6]] != CSV_HEADER:
        raise ValidationError(f"unexpected dataset header {header!r}")
    rows = []
    for line in reader:
        if not line:
            continue
        try:
            rows.append(
                DatasetRow(int(line[0]), int(line[1]), float(line[2]), float(line[3]),
                           float(line[4]), line[5])
            )
        except (ValueError, IndexError) as exc:
            raise ValidationError(f"bad dataset row {line!r}") from exc
    return rows


def pcms_to_jsonl(pcms: Sequence[PCM], rows: Sequence[DatasetRow]) -> str:
    lines = []
    for pcm, row in zip(pcms, rows):
        doc = pcm.to_json_dict()
        doc["id"] = row.id
        doc["source"] = row.source
        lines.append(json.dumps(doc))
    return "\n".join(lines) + "\n"


def pcms_from_jsonl(text: str) -> list[PCM]:
    out = []
    for line in text.splitlines():
        if line.strip():
            out.append(pcm_from_json_dict(json.loads(line, parse_float=Fraction)))
    return out
