"""Numeric kernels with a compiled fast path.

Importing this package picks the Cython extension when it was built and
falls back to the pure Python implementations otherwise; ``BACKEND``
reports which one is active.
"""

try:
    from . import _ckern as _impl

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on the build
    from . import _pykern as _impl

    BACKEND = "python"

jacobi_eigh = _impl.jacobi_eigh
mask_lex_less = _impl.mask_lex_less
min_negative_switching = _impl.min_negative_switching
min_balancing_vertex_set = _impl.min_balancing_vertex_set

__all__ = [
    "BACKEND",
    "jacobi_eigh",
    "mask_lex_less",
    "min_negative_switching",
    "min_balancing_vertex_set",
]
