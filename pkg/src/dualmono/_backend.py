"""Select the eigensolver kernel at import time.

The compiled ``_jacobi_ext`` is preferred. Setting ``DUALMONO_PURE_PYTHON=1``
forces the pure-Python fallback, which is also used when the extension was
not built.
"""
import os

from . import _jacobi_py

jacobi_eigh_py = _jacobi_py.jacobi_eigh

try:
    from ._jacobi_ext import jacobi_eigh as jacobi_eigh_ext
except ImportError:
    jacobi_eigh_ext = None

if jacobi_eigh_ext is not None and not os.environ.get("DUALMONO_PURE_PYTHON"):
    jacobi_eigh = jacobi_eigh_ext
    BACKEND = "cython"
else:
    jacobi_eigh = jacobi_eigh_py
    BACKEND = "python"
