"""Select the modular elimination kernel.

The compiled extension is used when it was built; set ``FROBLAB_KERNEL=python``
to force the numpy fallback.
"""
import os

from . import _kernel_py

BACKEND = "python"
rref_mod = _kernel_py.rref_mod

if os.environ.get("FROBLAB_KERNEL", "").lower() not in ("python", "py", "numpy"):
    try:
        from . import _kernel as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        rref_mod = _compiled.rref_mod
        BACKEND = "cython"

__all__ = ["rref_mod", "BACKEND"]
