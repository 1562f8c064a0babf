"""Order-wise standardization and two-cluster k-means labeling.

The cluster with the lower mean raw reversal proportion is designated
"consistent"; that designation, not the arbitrary k-means cluster ids,
is what callers consume.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ValidationError
from .simulate import DatasetRow

KMEANS_RESTARTS = 20
KMEANS_MAX_ITER = 300


@dataclass(frozen=True)
class StandardizationParams:
    """Per-order sample mean/std (ddof=1) for prop3Rev and max3Rev."""

    by_order: dict  # order -> {"mean": (mp, mm), "std": (sp, sm)}

    def transform(self, order: int, features: np.ndarray) -> np.ndarray:
        p = self.by_order[order]
        return (features - np.asarray(p["mean"])) / np.asarray(p["std"])


@dataclass(frozen=True)
class OrderCluster:
    centroids: tuple[tuple[float, float], tuple[float, float]]  # standardized space
    consistent_cluster: int
    wcss: float


@dataclass(frozen=True)
class ClusterModel:
    params: StandardizationParams
    by_order: dict  # order -> OrderCluster

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "orders": {
                str(n): {
                    "mean": list(self.params.by_order[n]["mean"]),
                    "std": list(self.params.by_order[n]["std"]),
                    "centroids": [list(c) for c in oc.centroids],
                    "consistentCluster": oc.consistent_cluster,
                    "wcss": oc.wcss,
                }
                for n, oc in self.by_order.items()
            },
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ClusterModel":
        try:
            params = {}
            clusters = {}
            for key, rec in data["orders"].items():
                n = int(key)
                params[n] = {"mean": tuple(rec["mean"]), "std": tuple(rec["std"])}
                clusters[n] = OrderCluster(
                    tuple(tuple(c) for c in rec["centroids"]),
                    int(rec["consistentCluster"]),
                    float(rec["wcss"]),
                )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed cluster model: {exc}") from exc
        return cls(StandardizationParams(params), clusters)


def fit_standardization(rows: Sequence[DatasetRow]) -> StandardizationParams:
    """Per-order mean/std of the two reversal features."""
    by_order: dict = {}
    orders = sorted({r.order for r in rows})
    for n in orders:
        feats = np.array([[r.prop3rev, r.max3rev] for r in rows if r.order == n])
        if len(feats) < 2:
            raise ValidationError(f"need at least 2 rows for order {n}, got {len(feats)}")
        std = feats.std(axis=0, ddof=1)
        if np.any(std == 0):
            raise ValidationError(f"zero variance in features for order {n}")
        by_order[n] = {"mean": tuple(feats.mean(axis=0)), "std": tuple(std)}
    return StandardizationParams(by_order)


def _lloyd_from(X: np.ndarray, cent: np.ndarray):
    labels = None
    for _ in range(KMEANS_MAX_ITER):
        d = ((X[:, None, :] - cent[None, :, :]) ** 2).sum(axis=2)
        new_labels = d.argmin(axis=1)
        if labels is not None and np.array_equal(labels, new_labels):
            break
        labels = new_labels
        if (labels == 0).sum() == 0 or (labels == 1).sum() == 0:
            return None
        cent = np.vstack([X[labels == 0].mean(axis=0), X[labels == 1].mean(axis=0)])
    wcss = float(((X - cent[labels]) ** 2).sum())
    return labels, cent, wcss


def _kmeans_once(X: np.ndarray, rng: np.random.Generator):
    """One k-means++ initialized Lloyd run to assignment fixpoint, k=2."""
    m = X.shape[0]
    c0 = X[int(rng.integers(m))]
    d2 = np.sum((X - c0) ** 2, axis=1)
    total = d2.sum()
    if total > 0:
        c1 = X[int(np.searchsorted(np.cumsum(d2 / total), rng.random()))]
    else:
        c1 = X[int(rng.integers(m))]
    return _lloyd_from(X, np.vstack([c0, c1]))


_EXHAUSTIVE_INIT_LIMIT = 32


def kmeans_two(X: np.ndarray, rng: np.random.Generator, restarts: int = KMEANS_RESTARTS):
    """Best of `restarts` Lloyd runs by within-cluster sum of squares.

    Small inputs additionally seed Lloyd from every pair of distinct points,
    which in practice pins the exhaustive-optimum 2-partition there.
    """
    if len(X) < 2:
        raise ValidationError("k-means needs at least 2 points")
    if np.allclose(X, X[0]):
        raise ValidationError("k-means input is degenerate (all points identical)")
    best = None
    if len(X) <= _EXHAUSTIVE_INIT_LIMIT:
        for i in range(len(X)):
            for j in range(i + 1, len(X)):
                if np.array_equal(X[i], X[j]):
                    continue
                out = _lloyd_from(X, np.vstack([X[i], X[j]]))
                if out is not None and (best is None or out[2] < best[2]):
                    best = out
    attempts = 0
    done = 0
    while done < restarts and attempts < restarts * 10:
        attempts += 1
        out = _kmeans_once(X, rng)
        if out is None:
            continue
        done += 1
        if best is None or out[2] < best[2]:
            best = out
    if best is None:
        raise ValidationError("k-means failed to find a non-degenerate 2-clustering")
    return best


def cluster_ab_initio(
    rows: Sequence[DatasetRow], seed: int
) -> tuple[list[bool], ClusterModel]:
    """Order-wise 2-means on standardized features; lower-raw-prop3Rev
    cluster is labeled consistent. Returns labels aligned with `rows`.
    """
    params = fit_standardization(rows)
    orders = sorted({r.order for r in rows})
    labels_by_index: dict[int, bool] = {}
    clusters: dict[int, OrderCluster] = {}
    for n in orders:
        idx = [t for t, r in enumerate(rows) if r.order == n]
        feats = np.array([[rows[t].prop3rev, rows[t].max3rev] for t in idx])
        Xs = params.transform(n, feats)
        rng = np.random.default_rng(np.random.SeedSequence([seed, n]))
        km_labels, cent, wcss = kmeans_two(Xs, rng)
        mean_prop = [feats[km_labels == c, 0].mean() for c in (0, 1)]
        consistent_cluster = 0 if mean_prop[0] < mean_prop[1] else 1
        clusters[n] = OrderCluster(
            (tuple(map(float, cent[0])), tuple(map(float, cent[1]))),
            consistent_cluster,
            wcss,
        )
        for t, lab in zip(idx, km_labels):
            labels_by_index[t] = bool(lab == consistent_cluster)
    return [labels_by_index[t] for t in range(len(rows))], ClusterModel(params, clusters)


def save_cluster_model(model: ClusterModel, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model.to_json_dict(), fh, indent=2)


def load_cluster_model(path: str) -> ClusterModel:
    with open(path, "r", encoding="utf-8") as fh:
        return ClusterModel.from_json_dict(json.load(fh))
