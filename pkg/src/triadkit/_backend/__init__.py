"""Backend selection for the numeric kernels.

The environment variable ``AHP_BACKEND`` picks the implementation:

* ``numba`` (default when numba is importable) - JIT-compiled kernels
* ``numpy`` - pure NumPy fallback, no compilation step

Both expose the same functions; ``benchmarks/backend_bench.py`` compares
their throughput.
"""
from __future__ import annotations

import os

from . import numpy_backend

_requested = os.environ.get("AHP_BACKEND", "").strip().lower()

if _requested == "numpy":
    kernels = numpy_backend
elif _requested == "numba":
    from . import numba_backend as kernels  # type: ignore[no-redef]
elif _requested in ("", "auto"):
    try:
        from . import numba_backend as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = numpy_backend
else:
    raise RuntimeError(
        f"AHP_BACKEND={_requested!r} not recognised (expected 'numba', 'numpy' or 'auto')"
    )


def backend_name() -> str:
    return kernels.NAME
