"""Consistency Ratio machinery and the Koczkodaj triad index."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import combinations

import numpy as np

from ._backend import kernels
from .eigen import principal_eigen
from .errors import ValidationError
from .pcm import MAX_ORDER, MIN_ORDER, PCM

#: CR acceptance threshold by order: stricter for the smallest matrices.
def cr_threshold(order: int) -> float:
    return 0.05 if order <= 4 else 0.10


@dataclass(frozen=True)
class CRReport:
    lambda_max: float
    ci: float
    ri: float
    cr: float
    threshold: float
    cr_consistent: bool


_RI_CACHE: dict | None = None

#: 17 admissible entries for random reciprocal matrices.
_RANDOM_ENTRY_VALUES = np.array(
    [1 / k for k in range(9, 1, -1)] + [float(k) for k in range(1, 10)]
)

_CHUNK = 20_000  # fixed so the RNG stream is independent of memory limits


def _ri_table() -> dict:
    global _RI_CACHE
    if _RI_CACHE is None:
        text = resources.files("triadkit.data").joinpath("random_index.json").read_text()
        _RI_CACHE = json.loads(text)
    return _RI_CACHE


def random_index(n: int) -> float:
    """Bundled Random Index (mean CI of simulated random PCMs) for order n."""
    if not (MIN_ORDER <= n <= MAX_ORDER):
        raise ValidationError(f"no random index for order {n} (supported {MIN_ORDER}..{MAX_ORDER})")
    return float(_ri_table()["values"][str(n)])


def random_index_provenance() -> dict:
    tab = _ri_table()
    return {"seed": tab["seed"], "samples": tab["samples"]}


def compute_random_index(n: int, samples: int, seed: int) -> float:
    """Mean CI over `samples` random reciprocal matrices of order n.

    This is the oracle that produced the bundled table; deterministic for a
    given seed regardless of chunking.
    """
    if not (MIN_ORDER <= n <= MAX_ORDER):
        raise ValidationError(f"order {n} outside supported range {MIN_ORDER}..{MAX_ORDER}")
    if samples < 1000:
        raise ValidationError("samples must be at least 1000")
    rng = np.random.default_rng(np.random.SeedSequence([seed, n]))
    iu = np.triu_indices(n, 1)
    total = 0.0
    done = 0
    while done < samples:
        m = min(_CHUNK, samples - done)
        idx = rng.integers(0, 17, size=(m, len(iu[0])))
        vals = _RANDOM_ENTRY_VALUES[idx]
        stack = np.ones((m, n, n))
        stack[:, iu[0], iu[1]] = vals
        stack[:, iu[1], iu[0]] = 1.0 / vals
        lams = kernels.lambda_max_batch(stack)
        total += float(np.sum((lams - n) / (n - 1)))
        done += m
    return total / samples


def consistency_ratio(pcm: PCM) -> CRReport:
    """Saaty's CR verdict for a PCM, using the bundled simulated RI table."""
    lam = principal_eigen(pcm).lambda_max
    n = pcm.order
    ci = (lam - n) / (n - 1)
    ri = random_index(n)
    cr = ci / ri
    thr = cr_threshold(n)
    return CRReport(lam, ci, ri, cr, thr, cr <= thr)


def koczkodaj_index(pcm: PCM) -> float:
    """Worst relative triad violation of a_ij * a_jk = a_ik, in [0, 1).

    Computed in exact rational arithmetic; a consistent matrix gives 0.
    """
    worst = Fraction(0)
    for i, j, k in combinations(range(pcm.order), 3):
        prod = pcm.entry(i, j) * pcm.entry(j, k)
        direct = pcm.entry(i, k)
        x = direct / prod
        m = min(abs(1 - x), abs(1 - 1 / x))
        if m > worst:
            worst = m
    return float(worst)
