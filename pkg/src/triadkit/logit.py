"""Binomial logistic model on (order, prop3Rev, max3Rev), fit by Fisher
scoring / IRLS, plus the bundled pretrained coefficients."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import NumericalError, ValidationError

IRLS_TOL = 1e-8
IRLS_MAX_ITER = 50
_DIVERGENCE_NORM = 1e8


@dataclass(frozen=True)
class LogitModel:
    beta0: float
    beta_order: float
    beta_prop3rev: float
    beta_max3rev: float
    threshold: float = 0.5
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        for b in (self.beta0, self.beta_order, self.beta_prop3rev, self.beta_max3rev):
            if not math.isfinite(b):
                raise ValidationError("model coefficients must be finite")
        if not (0.0 < self.threshold < 1.0):
            raise ValidationError("threshold must lie in (0, 1)")

    def log_odds(self, order: float, prop3rev: float, max3rev: float) -> float:
        return (
            self.beta0
            + self.beta_order * order
            + self.beta_prop3rev * prop3rev
            + self.beta_max3rev * max3rev
        )

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "beta0": self.beta0,
            "betaOrder": self.beta_order,
            "betaProp3Rev": self.beta_prop3rev,
            "betaMax3Rev": self.beta_max3rev,
            "threshold": self.threshold,
            "provenance": dict(self.provenance),
        }


@dataclass(frozen=True)
class FitResult:
    model: LogitModel
    deviance: float
    iterations: int


def paper_model() -> LogitModel:
    """The bundled pretrained classifier (decision threshold 0.5)."""
    return LogitModel(
        beta0=5.07370,
        beta_order=4.32041,
        beta_prop3rev=-113.39521,
        beta_max3rev=-5.22824,
        threshold=0.5,
        provenance={"source": "paper"},
    )


def _logistic(z: float) -> float:
    # overflow-safe in both tails
    if z >= 0:
        return 1.0 / (1.0 + math.exp(-z))
    ez = math.exp(z)
    return ez / (1.0 + ez)


def _logistic_vec(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def predict(model: LogitModel, order: float, prop3rev: float, max3rev: float) -> float:
    """Probability that a PCM with these features is consistent."""
    return _logistic(model.log_odds(order, prop3rev, max3rev))


def classify(model: LogitModel, order: float, prop3rev: float, max3rev: float) -> bool:
    """True = consistent (probability >= model threshold)."""
    return predict(model, order, prop3rev, max3rev) >= model.threshold


def _deviance(X: np.ndarray, y: np.ndarray, beta: np.ndarray) -> float:
    mu = np.clip(_logistic_vec(X @ beta), 1e-300, 1 - 1e-16)
    return float(-2.0 * np.sum(y * np.log(mu) + (1 - y) * np.log1p(-mu)))


def fit_logit(
    features: Sequence[tuple[float, float, float]],
    labels: Sequence[bool],
    threshold: float = 0.5,
    provenance: dict | None = None,
) -> FitResult:
    """Maximum-likelihood logistic fit of consistent-vs-not on raw
    (order, prop3Rev, max3Rev) via IRLS.

    Stops when the deviance changes by less than 1e-8; raises on perfect
    separation (diverging coefficients) or a singular information matrix.
    """
    X = np.column_stack([np.ones(len(features)), np.asarray(features, dtype=float)])
    y = np.asarray(labels, dtype=float)
    if X.shape[0] != y.shape[0] or X.shape[0] == 0:
        raise ValidationError("features and labels must be equal-length and non-empty")
    if not np.all(np.isfinite(X)):
        raise ValidationError("features must be finite")
    pos = y.sum()
    if pos == 0 or pos == len(y):
        raise ValidationError("both classes must be present to fit")

    beta = np.zeros(4)
    dev_old = math.inf
    for it in range(1, IRLS_MAX_ITER + 1):
        eta = X @ beta
        mu = _logistic_vec(eta)
        w = mu * (1.0 - mu)
        w = np.maximum(w, 1e-12)  # saturated rows carry no information
        z = eta + (y - mu) / w
        Xw = X.T * w
        try:
            beta = np.linalg.solve(Xw @ X, Xw @ z)
        except np.linalg.LinAlgError as exc:
            raise NumericalError("singular information matrix in IRLS") from exc
        if np.max(np.abs(beta)) > _DIVERGENCE_NORM:
            raise NumericalError("coefficients diverging (perfect separation?)")
        dev = _deviance(X, y, beta)
        if abs(dev - dev_old) < IRLS_TOL:
            model = LogitModel(*[float(b) for b in beta], threshold=threshold,
                               provenance=provenance or {"source": "trained"})
            return FitResult(model, dev, it)
        dev_old = dev
    raise NumericalError(f"IRLS did not converge in {IRLS_MAX_ITER} iterations")


def save_model(model: LogitModel, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model.to_json_dict(), fh, indent=2)
        fh.write("\n")


def load_model(path: str) -> LogitModel:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return model_from_json_dict(data)


def model_from_json_dict(data: dict) -> LogitModel:
    try:
        return LogitModel(
            beta0=float(data["beta0"]),
            beta_order=float(data["betaOrder"]),
            beta_prop3rev=float(data["betaProp3Rev"]),
            beta_max3rev=float(data["betaMax3Rev"]),
            threshold=float(data.get("threshold", 0.5)),
            provenance=dict(data.get("provenance", {})),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed model JSON: {exc}") from exc
