"""Cross-backend agreement: the numba kernels and the pure-NumPy fallback
must produce matching results (ties excluded, where cross-solver equality
is undefined)."""
import os
import subprocess
import sys

import numpy as np
import pytest

from triadkit._backend import backend_name, numpy_backend

try:
    from triadkit._backend import numba_backend
except ImportError:  # pragma: no cover
    numba_backend = None

from triadkit.simulate import simulate_logical, simulate_random

needs_numba = pytest.mark.skipif(numba_backend is None, reason="numba not installed")


def _random_floats(n, seed):
    return simulate_random(n, np.random.default_rng(seed)).as_float_array()


@needs_numba
def test_principal_eigenvector_agreement():
    for seed in range(15):
        a = _random_floats(int(3 + seed % 8), seed)
        v1, l1 = numpy_backend.principal_eigenvector(a)
        v2, l2 = numba_backend.principal_eigenvector(a)
        assert l1 == pytest.approx(l2, abs=1e-10)
        assert np.allclose(v1, v2, atol=1e-10)


def _has_tied_dominance(a) -> bool:
    """True when any full or triad dominance ratio sits at 1 within 1e-9;
    such ties resolve by solver noise and are excluded from cross-backend
    comparison."""
    from itertools import combinations

    def principal(m):
        w, v = np.linalg.eig(m)
        vec = v[:, int(np.argmax(w.real))].real
        return vec if vec.sum() > 0 else -vec

    n = a.shape[0]
    full = principal(a)
    for tri in combinations(range(n), 3):
        sub = principal(a[np.ix_(tri, tri)])
        for lp, lq in ((0, 1), (0, 2), (1, 2)):
            if abs(full[tri[lp]] / full[tri[lq]] - 1.0) < 1e-9:
                return True
            if abs(sub[lp] / sub[lq] - 1.0) < 1e-9:
                return True
    return False


@needs_numba
def test_reversal_scan_agreement_on_tie_free_matrices():
    compared = 0
    for seed in range(35):
        n = int(4 + seed % 4)
        a = simulate_logical(n, np.random.default_rng(seed)).as_float_array()
        if _has_tied_dominance(a):
            continue
        compared += 1
        out1 = numpy_backend.reversal_scan(a)
        out2 = numba_backend.reversal_scan(a)
        assert len(out1[6]) == len(out2[6])
        assert np.array_equal(out1[2], out2[2])  # triads
        assert np.array_equal(out1[3], out2[3])  # pairs
        assert np.allclose(out1[6], out2[6], atol=1e-9)
    assert compared >= 15


@needs_numba
def test_worked_example_counts_match(pcm_a, pcm_b, order5):
    for pcm, want in ((pcm_a, 13), (pcm_b, 4), (order5, 7)):
        a = pcm.as_float_array()
        assert len(numpy_backend.reversal_scan(a)[6]) == want
        assert len(numba_backend.reversal_scan(a)[6]) == want


@needs_numba
def test_lambda_batch_agreement():
    rng = np.random.default_rng(0)
    stack = np.stack([_random_floats(6, int(s)) for s in rng.integers(0, 1000, 40)])
    l1 = numpy_backend.lambda_max_batch(stack)
    l2 = numba_backend.lambda_max_batch(stack)
    assert np.allclose(l1, l2, atol=1e-10)


@needs_numba
def test_harker_agreement():
    for seed in (3, 5, 8):
        a1 = _random_floats(6, seed)
        a2 = a1.copy()
        e1, t1 = numpy_backend.harker_loop(a1, 0.12, 200)
        e2, t2 = numba_backend.harker_loop(a2, 0.12, 200)
        assert t1[-1] <= 0.12 and t2[-1] <= 0.12
        assert np.all(np.diff(t1) < 0) and np.all(np.diff(t2) < 0)


def test_env_var_selects_backend():
    code = "import triadkit; print(triadkit.backend_name())"
    for want in ("numpy",) + (("numba",) if numba_backend else ()):
        env = dict(os.environ, AHP_BACKEND=want)
        out = subprocess.run([sys.executable, "-c", code], capture_output=True,
                             text=True, env=env, check=True)
        assert out.stdout.strip() == want


def test_bad_backend_rejected():
    env = dict(os.environ, AHP_BACKEND="fortran")
    out = subprocess.run([sys.executable, "-c", "import triadkit"],
                         capture_output=True, text=True, env=env)
    assert out.returncode != 0
    assert "AHP_BACKEND" in out.stderr


def test_active_backend_reported():
    assert backend_name() in ("numba", "numpy")
