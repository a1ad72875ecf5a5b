"""Hot-kernel dispatch: compiled Cython twins when built, pure Python otherwise.

Set ``ARTINLAB_PURE_PYTHON=1`` to force the fallback at import time, or
call :func:`use_backend` at runtime (the benchmark does this).  Callers must
reach the kernels through this module (``kernels.reduce_vector``) so that
switching takes effect everywhere.
"""
from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_NAMES = ("reduce_vector", "add_pivot", "interreduce", "mul_terms", "eval_homogenized")

BACKEND = "python"


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def use_backend(name: str) -> None:
    global BACKEND
    if name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
        mod = _ckernels
    elif name == "python":
        mod = _pykernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    g = globals()
    for fn in _NAMES:
        g[fn] = getattr(mod, fn)
    BACKEND = name


use_backend("python" if os.environ.get("ARTINLAB_PURE_PYTHON") or _ckernels is None else "cython")
