"""Single-PCM evaluation: everything the CLI and the HTTP API report."""
from __future__ import annotations

from .consistency import consistency_ratio, koczkodaj_index
from .logit import LogitModel, predict
from .pcm import PCM
from .reversals import detect_reversals
from .version import __version__


def evaluate_pcm(pcm: PCM, model: LogitModel) -> dict:
    """Full diagnostic response for one matrix.

    The same dict backs `triadkit evaluate --json` and POST /api/evaluate,
    so the two surfaces can never drift apart.
    """
    report = detect_reversals(pcm)
    cr = consistency_ratio(pcm)
    probability = predict(model, float(pcm.order), report.prop3rev, report.max3rev)
    return {
        "schema": 1,
        "version": __version__,
        "order": pcm.order,
        "labels": list(pcm.labels) if pcm.labels else None,
        "eigenvector": [float(x) for x in report.priorities.eigenvector],
        "lambdaMax": cr.lambda_max,
        "ci": cr.ci,
        "ri": cr.ri,
        "cr": cr.cr,
        "crThreshold": cr.threshold,
        "crConsistent": cr.cr_consistent,
        "koczkodaj": koczkodaj_index(pcm),
        "reversalReport": report.to_json_dict(),
        "probabilityConsistent": probability,
        "prConsistent": probability >= model.threshold,
        "modelProvenance": dict(model.provenance),
    }
