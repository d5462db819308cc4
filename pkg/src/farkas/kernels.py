"""Backend selection for the scan kernels.

The compiled extension is used when it imported cleanly, the inputs fit
comfortably in 64-bit arithmetic, and the environment variable
FARKAS_KERNELS (auto | c | pure) does not say otherwise.  Anything else
runs the pure-Python twins, which are the semantic reference.  The
compiled lattice solve can still bail out at runtime with OverflowError;
that too falls back to pure.
"""

from __future__ import annotations

import os

from . import _kernels_py as _pure

try:
    from . import _ckernels as _compiled
except ImportError:
    _compiled = None

_MODE = os.environ.get("FARKAS_KERNELS", "auto").strip().lower()
if _MODE not in {"auto", "c", "pure"}:
    _MODE = "auto"
if _MODE == "c" and _compiled is None:
    raise ImportError(
        "FARKAS_KERNELS=c but the compiled kernels are not available"
    )

_MAX_ABS = 1 << 26
_MAX_DIM = 64


def compiled_available() -> bool:
    return _compiled is not None


def active_backend() -> str:
    """'c' when the compiled kernels will be tried first, else 'pure'."""
    return "c" if (_compiled is not None and _MODE != "pure") else "pure"


def _use_compiled() -> bool:
    return _compiled is not None and _MODE != "pure"


def _flat_ok(values) -> bool:
    return all(-_MAX_ABS <= x <= _MAX_ABS for x in values)


def _rows_ok(rows) -> bool:
    return all(_flat_ok(r) for r in rows)


def afr_subset_scan(lo, hi, normals, rhs, pivots, basis, sums_sorted):
    if (
        _use_compiled()
        and len(lo) <= _MAX_DIM
        and _flat_ok(lo)
        and _flat_ok(hi)
        and _rows_ok(normals)
        and _flat_ok(rhs)
        and _rows_ok(basis)
        and _rows_ok(sums_sorted)
    ):
        try:
            return _compiled.afr_subset_scan(
                lo, hi, normals, rhs, pivots, basis, sums_sorted
            )
        except OverflowError:
            pass
    return _pure.afr_subset_scan(lo, hi, normals, rhs, pivots, basis, sums_sorted)


def wfr_pattern_scan(vectors, normals, rhs, sums_sorted, restricted):
    if (
        _use_compiled()
        and len(vectors) <= _MAX_DIM
        and (not vectors or len(vectors[0]) <= _MAX_DIM)
        and _rows_ok(vectors)
        and _rows_ok(normals)
        and _flat_ok(rhs)
        and _rows_ok(sums_sorted)
    ):
        try:
            return _compiled.wfr_pattern_scan(
                vectors, normals, rhs, sums_sorted, restricted
            )
        except OverflowError:
            pass
    return _pure.wfr_pattern_scan(vectors, normals, rhs, sums_sorted, restricted)


def box_search_lex(vectors, lower, upper, target):
    if (
        _use_compiled()
        and len(vectors) <= _MAX_DIM
        and len(target) <= _MAX_DIM
        and _rows_ok(vectors)
        and _flat_ok(lower)
        and _flat_ok(upper)
        and _flat_ok(target)
    ):
        try:
            return _compiled.box_search_lex(vectors, lower, upper, target)
        except OverflowError:
            pass
    return _pure.box_search_lex(vectors, lower, upper, target)
