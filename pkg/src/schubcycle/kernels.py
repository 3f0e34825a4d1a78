"""Backend selection for the enumeration kernels.

The compiled ``_ckernels`` extension is used when importable; otherwise the
pure-Python ``_pykernels`` module.  Set ``SCHUBCYCLE_BACKEND=python`` to
force the fallback (``=compiled`` makes a missing extension an error).
"""

import importlib
import os

from . import _pykernels

__all__ = ["BACKEND", "available_backends", "get_backend"]


def _load_compiled():
    return importlib.import_module("schubcycle._ckernels")


def available_backends():
    names = ["python"]
    try:
        _load_compiled()
    except ImportError:
        pass
    else:
        names.insert(0, "compiled")
    return names


def get_backend(name=None):
    """Return the kernel module for ``name`` ("compiled" or "python")."""
    if name is None:
        name = os.environ.get("SCHUBCYCLE_BACKEND", "auto")
    if name == "python":
        return _pykernels
    if name == "compiled":
        return _load_compiled()
    if name != "auto":
        raise ValueError(f"unknown backend {name!r}")
    try:
        return _load_compiled()
    except ImportError:
        return _pykernels


_active = get_backend()
BACKEND = "python" if _active is _pykernels else "compiled"

enumerate_minors = _active.enumerate_minors
cover_edges = _active.cover_edges
chain_lengths = _active.chain_lengths
induced_covers = _active.induced_covers
