"""Kernel selection.

The compiled module is used when it imports and the instance fits in 64-bit
masks; otherwise the pure-Python versions run. Set ``ZONECOVER_PURE_PYTHON=1``
to force the fallback everywhere.
"""

import os

from . import _pykernels

try:
    if os.environ.get("ZONECOVER_PURE_PYTHON"):
        raise ImportError("compiled kernels disabled by environment")
    from . import _ckernels
except ImportError:
    _ckernels = None

HAVE_COMPILED = _ckernels is not None
BACKEND = "cython" if HAVE_COMPILED else "python"

_WORD = 64


def hitting_set_search(family, k, allowed, budget, backend=None):
    impl = _pick(backend, max([allowed, *family], default=0).bit_length())
    return impl.hitting_set_search(family, k, allowed, budget)


def acyclic_orientations(n, edges, cap, backend=None):
    impl = _pick(backend, max(n, len(edges)))
    return impl.acyclic_orientations(n, list(edges), cap)


def transitive_order_search(n, adj, partners, before, backend=None):
    impl = _pick(backend, n)
    return impl.transitive_order_search(n, list(adj), list(partners), list(before))


def _pick(backend, width):
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        if width > _WORD:
            raise ValueError(f"compiled kernels handle at most {_WORD} bits, got {width}")
        return _ckernels
    if _ckernels is not None and width <= _WORD:
        return _ckernels
    return _pykernels
