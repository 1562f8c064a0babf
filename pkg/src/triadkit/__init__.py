"""triadkit: consistency analysis for AHP pairwise comparison matrices
via triadic preference reversals."""
from ._backend import backend_name
from .consistency import (
    CRReport,
    compute_random_index,
    consistency_ratio,
    cr_threshold,
    koczkodaj_index,
    random_index,
)
from .eigen import PriorityResult, principal_eigen
from .errors import NumericalError, TriadkitError, ValidationError
from .evaluation import evaluate_pcm
from .logit import (
    FitResult,
    LogitModel,
    classify,
    fit_logit,
    load_model,
    paper_model,
    predict,
    save_model,
)
from .pcm import PCM, load_pcm, parse_pcm
from .pipeline import TrainingReport, train_model
from .reversals import (
    ReversalEvent,
    ReversalReport,
    detect_reversals,
    enumerate_triads,
    reversal_features,
)
from .simulate import (
    DatasetRow,
    SimConfig,
    generate_batch,
    harker_coerce,
    simulate_logical,
    simulate_random,
)
from .version import __version__

__all__ = [
    "CRReport", "DatasetRow", "FitResult", "LogitModel", "NumericalError",
    "PCM", "PriorityResult", "ReversalEvent", "ReversalReport", "SimConfig",
    "TrainingReport", "TriadkitError", "ValidationError", "__version__",
    "backend_name", "classify", "compute_random_index", "consistency_ratio",
    "cr_threshold", "detect_reversals", "enumerate_triads", "evaluate_pcm",
    "fit_logit", "generate_batch", "harker_coerce", "koczkodaj_index",
    "load_model", "load_pcm", "paper_model", "parse_pcm", "predict",
    "principal_eigen", "random_index", "reversal_features", "save_model",
    "simulate_logical", "simulate_random", "train_model",
]
