"""Backend selection: compiled extension if available, else pure Python.

Set EQBREAKS_PURE=1 to force the pure-Python kernel (used by the benchmark
to compare both).
"""
import os

if os.environ.get("EQBREAKS_PURE"):
    from . import _fallback as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _fallback as _impl

BACKEND = _impl.BACKEND
dp_equal_area_table = _impl.dp_equal_area_table
