"""Pure-NumPy compute kernels.

Reference implementation of the hot numeric paths. The numba backend
mirrors these functions; results must agree (see tests/test_backends.py).
All eigensolves go through LAPACK dgeev so that degenerate matrices with
tied rows resolve ties identically across call sites.
"""
from __future__ import annotations

import numpy as np

NAME = "numpy"


def principal_eigenvector(a: np.ndarray) -> tuple[np.ndarray, float]:
    """Perron eigenvector (unit L2 norm, positive orientation) and eigenvalue."""
    w, v = np.linalg.eig(a)
    i = int(np.argmax(w.real))
    vec = v[:, i].real.copy()
    if vec.sum() < 0.0:
        vec = -vec
    vec /= np.linalg.norm(vec)
    return vec, float(w[i].real)


def lambda_max_batch(stack: np.ndarray) -> np.ndarray:
    """Principal eigenvalues for a (m, n, n) stack of positive matrices."""
    w = np.linalg.eigvals(stack)
    return np.max(w.real, axis=1)


def reversal_scan(a: np.ndarray):
    """Scan all order-3 submatrices of `a` for eigen-dominance reversals.

    Returns (full_vec, lam, triads, pairs, full_ratios, triad_ratios,
    magnitudes) where the event arrays are aligned and ordered by
    (triad, pair) lexicographically.
    """
    n = a.shape[0]
    full_vec, lam = principal_eigenvector(a)
    triads = []
    pairs = []
    full_ratios = []
    triad_ratios = []
    magnitudes = []
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
                v3, _ = principal_eigenvector(sub)
                for (lp, lq), (p, q) in (((0, 1), (i, j)), ((0, 2), (i, k)), ((1, 2), (j, k))):
                    fr = full_vec[p] / full_vec[q]
                    tr = v3[lp] / v3[lq]
                    if (fr - 1.0) * (tr - 1.0) < 0.0:
                        triads.append((i, j, k))
                        pairs.append((p, q))
                        full_ratios.append(fr)
                        triad_ratios.append(tr)
                        magnitudes.append(fr / tr if fr > tr else tr / fr)
    return (
        full_vec,
        lam,
        np.array(triads, dtype=np.int64).reshape(-1, 3),
        np.array(pairs, dtype=np.int64).reshape(-1, 2),
        np.array(full_ratios),
        np.array(triad_ratios),
        np.array(magnitudes),
    )


def harker_loop(a: np.ndarray, ci_limit: float, max_edits: int) -> tuple[int, np.ndarray]:
    """Repeatedly replace the worst-fitting entry of `a` (in place) by its
    eigenvector-implied ratio until CI <= ci_limit or max_edits reached.

    Returns (edits, ci_trace); ci_trace[0] is the starting CI.
    """
    n = a.shape[0]
    trace = np.empty(max_edits + 1)
    v, lam = principal_eigenvector(a)
    ci = (lam - n) / (n - 1)
    trace[0] = ci
    edits = 0
    while ci > ci_limit and edits < max_edits:
        best = -1.0
        bi = bj = -1
        for i in range(n):
            for j in range(i + 1, n):
                r = a[i, j] * v[j] / v[i]
                err = r if r >= 1.0 else 1.0 / r
                if err > best:
                    best = err
                    bi, bj = i, j
        a[bi, bj] = v[bi] / v[bj]
        a[bj, bi] = 1.0 / a[bi, bj]
        edits += 1
        v, lam = principal_eigenvector(a)
        ci = (lam - n) / (n - 1)
        trace[edits] = ci
    return edits, trace[: edits + 1]
