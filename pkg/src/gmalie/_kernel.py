"""Backend selection for the mod-p elimination kernel.

At import time the compiled extension is preferred; the pure-Python fallback
is used when the extension is missing or when ``GMALIE_PURE`` is set in the
environment.  ``set_backend`` exists for benchmarks and backend-equivalence
tests; library code always goes through :func:`rref_mod_p`.
"""

from __future__ import annotations

import os

from . import _modp_py

try:
    from . import _modp as _compiled
except ImportError:
    _compiled = None

if _compiled is not None:
    import numpy as _np

    def _rref_compiled(data, p):
        arr = _np.array([list(r) for r in data], dtype=_np.int64)
        pivots = _compiled.rref_mod_p_inplace(arr, p)
        return arr.tolist(), list(pivots)


def _available():
    impls = {"pure": _modp_py.rref_mod_p}
    if _compiled is not None:
        impls["compiled"] = _rref_compiled
    return impls


def backends() -> dict:
    """Mapping of backend name to its rref implementation."""
    return dict(_available())


_force_pure = os.environ.get("GMALIE_PURE", "") not in ("", "0")
_active = "pure" if (_compiled is None or _force_pure) else "compiled"
_impl = _available()[_active]


def backend() -> str:
    """Name of the active backend ("compiled" or "pure")."""
    return _active


def set_backend(name: str) -> None:
    """Switch the active backend (benchmarking/testing hook)."""
    global _active, _impl
    impls = _available()
    if name not in impls:
        raise ValueError(f"backend {name!r} not available (have {sorted(impls)})")
    _active = name
    _impl = impls[name]


def rref_mod_p(data, p):
    """Reduced row echelon form over GF(p) via the active backend."""
    if not data or not data[0]:
        return [list(r) for r in data], []
    return _impl(data, p)
