"""Selection between the numba-jitted kernels and the pure-numpy fallback.

The default backend is numba when it imports cleanly.  Set the environment
variable TRIGRAPH_BACKEND to "numpy" or "numba" to force a choice; the
benchmark harness switches backends at runtime via use_backend().
"""

from __future__ import annotations

import os
from contextlib import contextmanager

ENV_VAR = "TRIGRAPH_BACKEND"

_BACKENDS = {}


def _load(name):
    if name in _BACKENDS:
        return _BACKENDS[name]
    if name == "numba":
        from . import _kernels_numba as mod
    elif name == "numpy":
        from . import _kernels_numpy as mod
    else:
        raise ValueError(f"unknown backend {name!r}; expected 'numba' or 'numpy'")
    _BACKENDS[name] = mod
    return mod


def _initial_choice():
    forced = os.environ.get(ENV_VAR, "").strip().lower()
    if forced:
        _load(forced)
        return forced
    try:
        _load("numba")
        return "numba"
    except ImportError:
        _load("numpy")
        return "numpy"


_active = _initial_choice()


def backend_name():
    return _active


def get_kernels(name=None):
    """Return the kernel module for `name`, or the active backend."""
    return _load(name or _active)


def set_backend(name):
    global _active
    _load(name)
    _active = name


@contextmanager
def use_backend(name):
    """Temporarily switch the active kernel backend."""
    global _active
    previous = _active
    set_backend(name)
    try:
        yield
    finally:
        _active = previous
