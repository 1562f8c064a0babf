"""Training pipeline: cluster-label a feature dataset, split, fit, report."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cluster import ClusterModel, cluster_ab_initio
from .errors import ValidationError
from .logit import FitResult, LogitModel, classify, fit_logit, paper_model
from .simulate import CSV_HEADER, DatasetRow


@dataclass(frozen=True)
class TrainingReport:
    fit: FitResult
    cluster_model: ClusterModel | None
    n_train: int
    n_test: int
    test_accuracy: float
    paper_agreement: float


def train_model(
    rows: Sequence[DatasetRow],
    seed: int,
    split: float = 0.7,
    labels: Sequence[bool] | None = None,
) -> TrainingReport:
    """Label rows by order-wise clustering (unless given), split, and fit.

    The holdout is scored against its cluster labels and against the
    bundled pretrained model for drift comparison.
    """
    if not (0.0 < split < 1.0):
        raise ValidationError("split must be in (0, 1)")
    if len(rows) < 10:
        raise ValidationError("too few rows to train on")
    cluster_model = None
    if labels is None:
        labels, cluster_model = cluster_ab_initio(rows, seed)
    elif len(labels) != len(rows):
        raise ValidationError("labels length does not match rows")

    rng = np.random.default_rng(np.random.SeedSequence([seed, 0x7261]))
    perm = rng.permutation(len(rows))
    n_train = int(round(split * len(rows)))
    if n_train < 2 or n_train >= len(rows):
        raise ValidationError("split leaves an empty train or test set")
    train_idx, test_idx = perm[:n_train], perm[n_train:]

    feats = [(float(r.order), r.prop3rev, r.max3rev) for r in rows]
    fit = fit_logit(
        [feats[t] for t in train_idx],
        [labels[t] for t in train_idx],
        provenance={"source": "trained", "seed": seed, "rows": int(n_train)},
    )

    ref = paper_model()
    hits = agree = 0
    for t in test_idx:
        mine = classify(fit.model, *feats[t])
        hits += mine == labels[t]
        agree += mine == classify(ref, *feats[t])
    n_test = len(test_idx)
    return TrainingReport(fit, cluster_model, n_train, n_test, hits / n_test, agree / n_test)


# -- labeled dataset CSV --------------------------------------------------

LABELED_HEADER = CSV_HEADER + ["abinitConsistent"]


def labeled_rows_to_csv(rows: Sequence[DatasetRow], labels: Sequence[bool]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(LABELED_HEADER)
    for r, lab in zip(rows, labels):
        w.writerow([r.id, r.order, f"{r.prop3rev:.6f}", f"{r.max3rev:.6f}",
                    f"{r.cr:.6f}", r.source, int(lab)])
    return buf.getvalue()


def labeled_rows_from_csv(text: str) -> tuple[list[DatasetRow], list[bool]]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValidationError("empty labeled CSV") from None
    if [h.strip() for h in header[:7]] != LABELED_HEADER:
        raise ValidationError(f"unexpected labeled dataset header {header!r}")
    rows, labels = [], []
    for line in reader:
        if not line:
            continue
        try:
            rows.append(DatasetRow(int(line[0]), int(line[1]), float(line[2]),
                                   float(line[3]), float(line[4]), line[5]))
            labels.append(bool(int(line[6])))
        except (ValueError, IndexError) as exc:
            raise ValidationError(f"bad labeled row {line!r}") from exc
    return rows, labels
