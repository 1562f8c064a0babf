"""Numba-accelerated compute kernels (default backend).

Same contract as numpy_backend; every eigensolve is LAPACK dgeev via
np.linalg.eig inside nopython code, so tie resolution on degenerate
matrices matches between per-call and batched paths.
"""
from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _principal(a):
    w, v = np.linalg.eig(a.astype(np.complex128))
    best = 0
    for t in range(1, w.shape[0]):
        if w[t].real > w[best].real:
            best = t
    vec = v[:, best].real.copy()
    s = 0.0
    for x in vec:
        s += x
    if s < 0.0:
        vec = -vec
    nrm = 0.0
    for x in vec:
        nrm += x * x
    vec /= np.sqrt(nrm)
    return vec, w[best].real


# batched eigenvalues: numpy's stacked eigvals amortizes the LAPACK call
# overhead better than per-matrix JIT calls (measured 3-5x faster), so the
# batch path reuses it verbatim
from . import numpy_backend as _np_backend  # noqa: E402


@njit(cache=True)
def _reversal_scan(a):
    n = a.shape[0]
    full_vec, lam = _principal(a)
    cap = n * (n - 1) * (n - 2) // 2  # 3 * C(n,3)
    triads = np.empty((cap, 3), np.int64)
    pairs = np.empty((cap, 2), np.int64)
    full_ratios = np.empty(cap)
    triad_ratios = np.empty(cap)
    magnitudes = np.empty(cap)
    count = 0
    sub = np.empty((3, 3))
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            for k in range(j + 1, n):
                sub[0, 0] = 1.0
                sub[0, 1] = a[i, j]
                sub[0, 2] = a[i, k]
                sub[1, 0] = a[j, i]
                sub[1, 1] = 1.0
                sub[1, 2] = a[j, k]
                sub[2, 0] = a[k, i]
                sub[2, 1] = a[k, j]
                sub[2, 2] = 1.0
                v3, _ = _principal(sub)
                for t in range(3):
                    if t == 0:
                        p, q, lp, lq = i, j, 0, 1
                    elif t == 1:
                        p, q, lp, lq = i, k, 0, 2
                    else:
                        p, q, lp, lq = j, k, 1, 2
                    fr = full_vec[p] / full_vec[q]
                    tr = v3[lp] / v3[lq]
                    if (fr - 1.0) * (tr - 1.0) < 0.0:
                        triads[count, 0] = i
                        triads[count, 1] = j
                        triads[count, 2] = k
                        pairs[count, 0] = p
                        pairs[count, 1] = q
                        full_ratios[count] = fr
                        triad_ratios[count] = tr
                        magnitudes[count] = fr / tr if fr > tr else tr / fr
                        count += 1
    return (full_vec, lam, triads[:count].copy(), pairs[:count].copy(),
            full_ratios[:count].copy(), triad_ratios[:count].copy(),
            magnitudes[:count].copy())


@njit(cache=True)
def _harker_loop(a, ci_limit, max_edits):
    n = a.shape[0]
    trace = np.empty(max_edits + 1)
    v, lam = _principal(a)
    ci = (lam - n) / (n - 1)
    trace[0] = ci
    edits = 0
    while ci > ci_limit and edits < max_edits:
        best = -1.0
        bi = -1
        bj = -1
        for i in range(n):
            for j in range(i + 1, n):
                r = a[i, j] * v[j] / v[i]
                err = r if r >= 1.0 else 1.0 / r
                if err > best:
                    best = err
                    bi = i
                    bj = j
        a[bi, bj] = v[bi] / v[bj]
        a[bj, bi] = 1.0 / a[bi, bj]
        edits += 1
        v, lam = _principal(a)
        ci = (lam - n) / (n - 1)
        trace[edits] = ci
    return edits, trace[: edits + 1].copy()


def principal_eigenvector(a: np.ndarray) -> tuple[np.ndarray, float]:
    vec, lam = _principal(np.ascontiguousarray(a))
    return vec, float(lam)


def lambda_max_batch(stack: np.ndarray) -> np.ndarray:
    return _np_backend.lambda_max_batch(stack)


def reversal_scan(a: np.ndarray):
    out = _reversal_scan(np.ascontiguousarray(a))
    vec, lam = out[0], float(out[1])
    return (vec, lam) + out[2:]


def harker_loop(a: np.ndarray, ci_limit: float, max_edits: int) -> tuple[int, np.ndarray]:
    edits, trace = _harker_loop(a, ci_limit, max_edits)
    return int(edits), trace


def warmup() -> None:
    """Trigger JIT compilation on tiny inputs (cached across processes)."""
    one = np.ones((3, 3))
    principal_eigenvector(one)
    lambda_max_batch(one[None, :, :])
    reversal_scan(np.ones((4, 4)))
    harker_loop(one.copy(), 1.0, 1)
