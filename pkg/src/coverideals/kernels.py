"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``COVERIDEALS_PURE_PYTHON=1`` to force the fallback.  Both backends share
one API; calls the compiled kernel cannot serve (rationals, masks over 62
bits) go to the fallback automatically.
"""

from __future__ import annotations

import os

from . import _kernels_py as python_kernels

try:
    if os.environ.get("COVERIDEALS_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _kernels as compiled_kernels
except ImportError:
    compiled_kernels = None

BACKEND = "cython" if compiled_kernels is not None else "python"


def _pick(backend: str | None):
    if backend is None:
        backend = BACKEND
    if backend == "python":
        return python_kernels
    if backend == "cython":
        if compiled_kernels is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e .`")
        return compiled_kernels
    raise ValueError(f"unknown backend {backend!r}")


def rank_mod_p(M, p: int, backend: str | None = None) -> int:
    impl = _pick(backend)
    if p == 0:
        impl = python_kernels
    return impl.rank_mod_p(M, p)


def reduced_homology_dim(sigma: int, nonfaces, d: int, p: int, backend: str | None = None) -> int:
    impl = _pick(backend)
    if p == 0 or sigma.bit_length() > 62:
        impl = python_kernels
    return impl.reduced_homology_dim(sigma, nonfaces, d, p)
