"""Principal-eigenvector prioritization."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import NumericalError
from .pcm import PCM


@dataclass(frozen=True)
class PriorityResult:
    """Aggregate priorities of a PCM.

    eigenvector: unit-L2, all-positive Perron vector.
    lambda_max:  principal eigenvalue (>= order for reciprocal matrices).
    iterations:  0 for the direct dense solver used here.
    """

    eigenvector: tuple[float, ...]
    lambda_max: float
    iterations: int = 0

    def ratio(self, p: int, q: int) -> float:
        return self.eigenvector[p] / self.eigenvector[q]


def principal_eigen(pcm: PCM) -> PriorityResult:
    """Perron vector and principal eigenvalue of the full matrix."""
    vec, lam = kernels.principal_eigenvector(pcm.as_float_array())
    if not np.all(np.isfinite(vec)) or not np.isfinite(lam):
        raise NumericalError("eigensolve produced non-finite values")
    if np.any(vec <= 0):
        # Perron vector of a positive matrix is strictly positive; anything
        # else means the solver latched onto the wrong eigenpair.
        raise NumericalError("eigensolve returned a non-positive principal vector")
    return PriorityResult(tuple(float(x) for x in vec), float(lam))
