"""Backend selection for the hot kernels.

WIDTHLAB_BACKEND picks the implementation:
    auto   - numba if importable, else numpy (default)
    numba  - require the JIT kernels
    numpy  - force the pure numpy/python fallback
"""

import os

from ..errors import ParameterError

_env_choice = None


def _load(name: str):
    if name == "numpy":
        from . import kernels_numpy as mod
        return mod, "numpy"
    if name == "numba":
        from . import kernels_numba as mod
        return mod, "numba"
    if name == "auto":
        try:
            from . import kernels_numba as mod
            return mod, "numba"
        except ImportError:
            from . import kernels_numpy as mod
            return mod, "numpy"
    raise ParameterError(f"unknown backend {name!r}")


def get_kernels(name: str | None = None):
    """Kernel module for `name`, or the env-selected default."""
    global _env_choice
    if name is not None:
        return _load(name.strip().lower())[0]
    if _env_choice is None:
        wanted = os.environ.get("WIDTHLAB_BACKEND", "auto").strip().lower()
        _env_choice = _load(wanted)
    return _env_choice[0]


def backend_name() -> str:
    get_kernels()
    return _env_choice[1]
