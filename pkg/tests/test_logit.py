import json
import math

import numpy as np
import pytest

from triadkit.errors import NumericalError, ValidationError
from triadkit.logit import (
    LogitModel,
    classify,
    fit_logit,
    load_model,
    model_from_json_dict,
    paper_model,
    predict,
    save_model,
)


def test_paper_model_coefficients():
    m = paper_model()
    assert (m.beta0, m.beta_order, m.beta_prop3rev, m.beta_max3rev) == (
        5.07370, 4.32041, -113.39521, -5.22824,
    )
    assert m.threshold == 0.5
    assert m.provenance == {"source": "paper"}


def test_predict_worked_examples():
    m = paper_model()
    assert 4e-11 <= predict(m, 5, 7 / 30, 4.4738) <= 2e-10
    assert predict(m, 6, 13 / 60, 2.05562) == pytest.approx(0.013, abs=0.003)
    assert predict(m, 6, 4 / 60, 2.0380) >= 0.9999


def test_classify_verdicts():
    m = paper_model()
    assert not classify(m, 6, 13 / 60, 2.05562)   # reversal-heavy
    assert classify(m, 6, 4 / 60, 2.0380)         # reversal-light
    for n in range(4, 13):
        assert classify(m, n, 0.0, 1.0)           # featureless matrices


def test_predict_monotonicity():
    m = paper_model()
    rng = np.random.default_rng(0)
    for _ in range(50):
        n = float(rng.integers(4, 13))
        p = float(rng.random() * 0.4)
        x = float(1 + rng.random() * 5)
        base = predict(m, n, p, x)
        assert predict(m, n, p + 0.01, x) < base
        assert predict(m, n, p, x + 0.1) < base
        assert predict(m, n + 1, p, x) > base


def test_predict_overflow_safe():
    # saturates cleanly instead of overflowing in either tail
    m = paper_model()
    assert predict(m, 4, 1.0, 200.0) == 0.0
    assert predict(m, 4000, 0.0, 1.0) == 1.0
    assert 0.0 < predict(m, 4, 1.0, 50.0) < 1e-100


def test_classify_threshold_semantics():
    m = LogitModel(0.0, 0.0, 0.0, 0.0, threshold=0.5)
    # z == 0 -> p == 0.5 -> consistent at the default threshold
    assert classify(m, 5, 0.1, 2.0)


def test_model_validation():
    with pytest.raises(ValidationError):
        LogitModel(float("nan"), 1, 1, 1)
    with pytest.raises(ValidationError):
        LogitModel(0, 0, 0, 0, threshold=1.0)


def _sample_dataset(rng, n=60):
    order = rng.integers(4, 13, n).astype(float)
    prop = rng.random(n) * 0.3
    mx = 1 + rng.random(n) * 4
    z = 2.0 + 0.5 * order - 20.0 * prop - 1.0 * mx + rng.normal(0, 1.5, n)
    y = rng.random(n) < 1 / (1 + np.exp(-z))
    feats = list(zip(order, prop, mx))
    return feats, [bool(t) for t in y]


def test_irls_matches_statsmodels_reference():
    sm = pytest.importorskip("statsmodels.api")
    rng = np.random.default_rng(42)
    checked = 0
    for _ in range(20):
        feats, labels = _sample_dataset(rng)
        if sum(labels) in (0, len(labels)):
            continue
        try:
            fit = fit_logit(feats, labels)
        except NumericalError:
            continue  # separation; the reference would diverge too
        X = np.column_stack([np.ones(len(feats)), np.array(feats)])
        ref = sm.GLM(np.array(labels, dtype=float), X,
                     family=sm.families.Binomial()).fit()
        got = (fit.model.beta0, fit.model.beta_order,
               fit.model.beta_prop3rev, fit.model.beta_max3rev)
        assert np.allclose(got, ref.params, atol=1e-6)
        assert fit.deviance == pytest.approx(ref.deviance, abs=1e-6)
        checked += 1
    assert checked >= 15


def test_irls_null_feature_coefficient_small():
    rng = np.random.default_rng(7)
    n = 4000
    order = rng.integers(4, 13, n).astype(float)
    prop = rng.random(n) * 0.3          # label-independent
    mx = 1 + rng.random(n) * 4
    y = [bool(t) for t in rng.random(n) < 0.5]
    fit = fit_logit(list(zip(order, prop, mx)), y)
    # a null effect stays near zero relative to the paper-scale coefficients
    assert abs(fit.model.beta_prop3rev) < 3.0


def test_irls_affine_equivariance():
    rng = np.random.default_rng(9)
    feats, labels = _sample_dataset(rng, n=300)
    fit = fit_logit(feats, labels)
    scaled = [(o, 3.0 * p, x - 1.0) for (o, p, x) in feats]
    fit2 = fit_logit(scaled, labels)
    assert fit2.model.beta_prop3rev == pytest.approx(fit.model.beta_prop3rev / 3.0, rel=1e-6)
    assert fit2.model.beta_max3rev == pytest.approx(fit.model.beta_max3rev, rel=1e-6)
    assert fit2.model.beta0 == pytest.approx(fit.model.beta0 + fit.model.beta_max3rev, rel=1e-6)


def test_irls_requires_both_classes():
    feats = [(4.0, 0.1, 2.0)] * 10
    with pytest.raises(ValidationError):
        fit_logit(feats, [True] * 10)


def test_irls_detects_separation():
    # perfectly separable on prop3Rev
    feats = [(5.0, 0.01 * i, 2.0) for i in range(40)]
    labels = [i < 20 for i in range(40)]
    with pytest.raises(NumericalError):
        fit_logit(feats, labels)


def test_model_json_round_trip(tmp_path):
    m = LogitModel(1.2345678901234567, -2.5, 3.25, -0.1, threshold=0.42,
                   provenance={"source": "trained", "seed": 7, "rows": 100})
    path = tmp_path / "m.json"
    save_model(m, str(path))
    back = load_model(str(path))
    assert back == m  # bit-exact floats via repr round-trip


def test_bundled_model_file_matches_constants():
    from importlib import resources

    text = resources.files("triadkit.data").joinpath("paper_model.json").read_text()
    got = model_from_json_dict(json.loads(text))
    assert got == paper_model()


def test_model_load_rejects_missing_field(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"beta0": 1.0, "betaOrder": 2.0}')
    with pytest.raises(ValidationError):
        load_model(str(path))
