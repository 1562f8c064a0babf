"""Command-line front end.

Exit codes: 0 success, 1 validation error, 2 I/O error, 3 numerical
failure. Errors print to stderr as ``error[<category>]: message``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .bench import (
    SCATTER_COERCE_THRESHOLD,
    report_to_json,
    run_calibration,
    run_comparison,
    scatter_rows,
    scatter_to_csv,
)
from .cluster import cluster_ab_initio
from .consistency import random_index
from .errors import NumericalError, TriadkitError, ValidationError
from .evaluation import evaluate_pcm
from .logit import LogitModel, load_model, paper_model, save_model
from .pcm import load_pcm
from .pipeline import labeled_rows_from_csv, labeled_rows_to_csv, train_model
from .simulate import (
    DatasetRow,
    SimConfig,
    features_for,
    generate_batch,
    harker_coerce,
    pcms_to_jsonl,
    row_rng,
    rows_from_csv,
    rows_to_csv,
    simulate_random,
)
from .version import __version__

DEFAULT_ADDR = "127.0.0.1:8645"


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; map those to validation
    def error(self, message):
        raise ValidationError(message)


def _parse_orders(text: str) -> tuple[int, int]:
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return int(lo), int(hi)
        n = int(text)
        return n, n
    except ValueError:
        raise ValidationError(f"bad order range {text!r} (expected N or A-B)") from None


def _resolve_model(path: str | None) -> LogitModel:
    if path is None:
        path = os.environ.get("AHP_MODEL_PATH") or None
    if path is None:
        return paper_model()
    return load_model(path)


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def build_parser() -> _Parser:
    ap = _Parser(prog="triadkit", description="Pairwise-comparison consistency toolkit")
    ap.add_argument("--version", action="version", version=f"triadkit {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", help="evaluate one PCM file (CSV or JSON)")
    p.add_argument("file")
    p.add_argument("--model")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("simulate", help="simulate PCMs and optionally their features")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--order", type=int)
    g.add_argument("--orders")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--kind", choices=("logical", "random"), default="logical")
    p.add_argument("--pool", type=int, default=5, help="candidate pool for logical rounding")
    p.add_argument("--out", required=True, help="PCM archive (JSON lines)")
    p.add_argument("--features", help="also write the feature dataset CSV here")

    p = sub.add_parser("coerce", help="coerce a PCM to CR-consistency (Harker edits)")
    p.add_argument("file")
    p.add_argument("--threshold", type=float, default=0.10)
    p.add_argument("--max-iter", type=int, default=1000)
    p.add_argument("--out", help="write coerced PCM JSON here (default stdout)")

    p = sub.add_parser("train", help="cluster-label a dataset and fit the classifier")
    p.add_argument("--data", required=True, help="feature CSV (labeled or unlabeled)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="output model JSON")
    p.add_argument("--split", type=float, default=0.7)
    p.add_argument("--labeled-out", help="write the cluster-labeled dataset CSV here")

    p = sub.add_parser("calibrate", help="order-wise ab-initio consistent fractions")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--orders", default="4-12")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("benchmark", help="classifier vs CR comparison on a fresh batch")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--orders", default="4-12")
    p.add_argument("--model")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("scatter", help="logical vs CR-coerced feature cloud CSV")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--orders", default="6,8,10,12")
    p.add_argument("--coerce-threshold", type=float, default=SCATTER_COERCE_THRESHOLD)
    p.add_argument("--out", required=True)

    p = sub.add_parser("serve", help="run the HTTP service (API + UI)")
    p.add_argument("--addr", default=None, help=f"host:port (default {DEFAULT_ADDR})")
    p.add_argument("--model")
    p.add_argument("--ui", help="directory of built UI assets to serve at /")

    return ap


def _cmd_evaluate(args) -> int:
    pcm = load_pcm(args.file)
    response = evaluate_pcm(pcm, _resolve_model(args.model))
    if args.json:
        print(json.dumps(response, indent=2))
        return 0
    rep = response["reversalReport"]
    print(f"order            {response['order']}")
    print(f"eigenvector      {np.round(response['eigenvector'], 4).tolist()}")
    print(f"lambda_max       {response['lambdaMax']:.4f}")
    print(f"CI/RI/CR         {response['ci']:.4f} / {response['ri']:.4f} / {response['cr']:.4f}")
    print(f"CR verdict       {'consistent' if response['crConsistent'] else 'inconsistent'}"
          f" (threshold {response['crThreshold']:.2f})")
    print(f"koczkodaj        {response['koczkodaj']:.4f}")
    print(f"reversals        {rep['count']} of {rep['maxPossible']}"
          f" (prop3Rev {rep['prop3Rev']:.4f}, max3Rev {rep['max3Rev']:.4f})")
    for e in rep["events"]:
        print(f"  pair {tuple(e['pair'])} in triad {tuple(e['triad'])}"
              f" magnitude {e['magnitude']:.3f}")
    print(f"p(consistent)    {response['probabilityConsistent']:.6g}")
    print(f"PR verdict       {'consistent' if response['prConsistent'] else 'inconsistent'}")
    return 0


def _cmd_simulate(args) -> int:
    orders = (args.order, args.order) if args.order else _parse_orders(args.orders)
    cfg = SimConfig(orders=orders, count_per_order=args.count, seed=args.seed,
                    candidate_pool=args.pool)
    if args.kind == "logical":
        rows, pcms = generate_batch(cfg, keep_pcms=True)
    else:
        rows, pcms = [], []
        for order in cfg.order_list():
            for i in range(cfg.count_per_order):
                pcm = simulate_random(order, row_rng(cfg.seed, order, i))
                lam, prop, mx = features_for(pcm)
                cr = (lam - order) / (order - 1) / random_index(order)
                rows.append(DatasetRow(i, order, prop, mx, cr, "random"))
                pcms.append(pcm)
    _write(args.out, pcms_to_jsonl(pcms, rows))
    if args.features:
        _write(args.features, rows_to_csv(rows))
    print(f"wrote {len(rows)} PCMs to {args.out}", file=sys.stderr)
    return 0


def _cmd_coerce(args) -> int:
    pcm = load_pcm(args.file)
    coerced, edits = harker_coerce(pcm, args.threshold, args.max_iter)
    doc = coerced.to_json_dict()
    doc["edits"] = edits
    text = json.dumps(doc, indent=2)
    if args.out:
        _write(args.out, text)
    else:
        print(text)
    return 0


def _cmd_train(args) -> int:
    with open(args.data, "r", encoding="utf-8") as fh:
        text = fh.read()
    header = text.splitlines()[0] if text else ""
    if "abinitConsistent" in header:
        rows, labels = labeled_rows_from_csv(text)
        report = train_model(rows, args.seed, args.split, labels=labels)
    else:
        rows = rows_from_csv(text)
        report = train_model(rows, args.seed, args.split)
        labels = None
    save_model(report.fit.model, args.out)
    if args.labeled_out:
        if labels is None:
            labels, _ = cluster_ab_initio(rows, args.seed)
        _write(args.labeled_out, labeled_rows_to_csv(rows, labels))
    m = report.fit.model
    print(f"fitted on {report.n_train} rows ({report.fit.iterations} scoring iterations,"
          f" deviance {report.fit.deviance:.1f})")
    print(f"coefficients     intercept {m.beta0:.4f}  order {m.beta_order:.4f}"
          f"  prop3Rev {m.beta_prop3rev:.4f}  max3Rev {m.beta_max3rev:.4f}")
    print(f"holdout accuracy {report.test_accuracy:.4f} on {report.n_test} rows;"
          f" agreement with bundled model {report.paper_agreement:.4f}")
    print(f"model written to {args.out}")
    return 0


def _cmd_calibrate(args) -> int:
    cfg = SimConfig(orders=_parse_orders(args.orders), count_per_order=args.count, seed=args.seed)
    report = run_calibration(cfg)
    print(report_to_json(report) if args.json else report.to_text())
    return 0


def _cmd_benchmark(args) -> int:
    cfg = SimConfig(orders=_parse_orders(args.orders), count_per_order=args.count, seed=args.seed)
    report = run_comparison(cfg, _resolve_model(args.model))
    print(report_to_json(report) if args.json else report.to_text())
    return 0


def _cmd_scatter(args) -> int:
    try:
        orders = [int(x) for x in args.orders.split(",") if x.strip()]
    except ValueError:
        raise ValidationError(f"bad orders list {args.orders!r}") from None
    rows = scatter_rows(orders, args.count, args.seed, args.coerce_threshold)
    _write(args.out, scatter_to_csv(rows))
    print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    addr = args.addr or os.environ.get("AHP_ADDR") or DEFAULT_ADDR
    host, _, port_text = addr.rpartition(":")
    if not host or not port_text.isdigit():
        raise ValidationError(f"bad --addr {addr!r} (expected host:port)")
    app = create_app(_resolve_model(args.model), ui_dir=args.ui)
    uvicorn.run(app, host=host, port=int(port_text), log_level="info")
    return 0


_COMMANDS = {
    "evaluate": _cmd_evaluate,
    "simulate": _cmd_simulate,
    "coerce": _cmd_coerce,
    "train": _cmd_train,
    "calibrate": _cmd_calibrate,
    "benchmark": _cmd_benchmark,
    "scatter": _cmd_scatter,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"error[validation]: {exc}", file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(f"error[numerical]: {exc}", file=sys.stderr)
        return 3
    except TriadkitError as exc:  # future subclasses
        print(f"error[{exc.category}]: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error[io]: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
