"""HTTP service: evaluation API plus static hosting for the built UI.

Stateless by construction: handlers close over the immutable loaded model
and call pure library functions, so identical bodies always produce
identical responses.
"""
from __future__ import annotations

import os

import numpy as np
from fastapi import Body, FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .errors import TriadkitError, ValidationError
from .evaluation import evaluate_pcm
from .logit import LogitModel
from .pcm import MAX_ORDER, MIN_ORDER, PCM, pcm_from_json_dict
from .simulate import row_rng, simulate_logical
from .version import __version__


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": True, "detail": message})


def _pcm_from_payload(payload) -> PCM:
    """Parse an /api/evaluate body; 422-worthy order issues raise ValueError."""
    if not isinstance(payload, dict):
        raise ValidationError("request body must be a JSON object")
    matrix = payload.get("matrix")
    if not isinstance(matrix, list) or not matrix:
        raise ValidationError('request must carry a non-empty "matrix" array')
    n = len(matrix)
    if not (MIN_ORDER <= n <= MAX_ORDER):
        raise _UnsupportedOrder(f"order {n} outside supported range {MIN_ORDER}..{MAX_ORDER}")
    # decimal strings/numbers stay exact through Fraction in pcm parsing
    return pcm_from_json_dict({"matrix": matrix, "labels": payload.get("labels")})


class _UnsupportedOrder(Exception):
    def __init__(self, message: str):
        self.message = message


def create_app(model: LogitModel, ui_dir: str | None = None) -> FastAPI:
    from ._backend import kernels

    if hasattr(kernels, "warmup"):
        kernels.warmup()  # pre-JIT so the first edit evaluates without a stall
    app = FastAPI(title="triadkit", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],  # demo service; the bundled UI is same-origin
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(Exception)
    async def _internal(request, exc):  # pragma: no cover - safety net
        return _error(500, "internal error")

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "version": __version__}

    @app.get("/api/model")
    def get_model():
        return model.to_json_dict()

    @app.post("/api/evaluate")
    def api_evaluate(payload: dict = Body(...)):
        try:
            pcm = _pcm_from_payload(payload)
        except _UnsupportedOrder as exc:
            return _error(422, exc.message)
        except TriadkitError as exc:
            return _error(400, str(exc))
        return evaluate_pcm(pcm, model)

    @app.post("/api/simulate")
    def api_simulate(payload: dict = Body(default={})):
        order = payload.get("order")
        if not isinstance(order, int) or isinstance(order, bool):
            return _error(400, '"order" must be an integer')
        if not (MIN_ORDER <= order <= MAX_ORDER):
            return _error(422, f"order {order} outside supported range {MIN_ORDER}..{MAX_ORDER}")
        seed = payload.get("seed")
        if seed is None:
            seed = int(np.random.default_rng().integers(2**31))
        elif not isinstance(seed, int) or isinstance(seed, bool):
            return _error(400, '"seed" must be an integer')
        pcm = simulate_logical(order, row_rng(seed, order, 0))
        return {
            "schema": 1,
            "version": __version__,
            "seed": seed,
            "matrix": pcm.to_json_dict(),
            "evaluation": evaluate_pcm(pcm, model),
        }

    if ui_dir is None:
        ui_dir = os.environ.get("AHP_UI_DIR") or _default_ui_dir()
    if ui_dir and os.path.isdir(ui_dir):
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def _default_ui_dir() -> str | None:
    # repo layout: frontend/dist next to src/; present only when the UI is built
    here = os.path.dirname(os.path.abspath(__file__))
    candidate = os.path.abspath(os.path.join(here, "..", "..", "frontend", "dist"))
    return candidate if os.path.isdir(candidate) else None
