"""Numeric kernel selection.

The hot inner loops (three-term determinant recurrences, Sturm-sequence
bisection, the factorization's last-row recurrence) exist twice: a compiled
Cython extension (``_cy``) and a pure-numpy twin (``_py``).  The compiled
lane is preferred when importable; set ``TRITAB_KERNEL=pure`` or
``TRITAB_KERNEL=compiled`` to force a lane.  ``benchmarks/bench_kernels.py``
compares the two.
"""

import os

_choice = os.environ.get("TRITAB_KERNEL", "").strip().lower()
if _choice not in ("", "pure", "compiled"):
    raise ImportError(f"TRITAB_KERNEL must be 'pure' or 'compiled', got {_choice!r}")

if _choice == "pure":
    from . import _py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _cy as _impl

        BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise
        from . import _py as _impl

        BACKEND = "pure"

det_eval = _impl.det_eval
det_eval_slog = _impl.det_eval_slog
sturm_count = _impl.sturm_count
bisect_spectrum = _impl.bisect_spectrum
plu_last_row = _impl.plu_last_row

__all__ = [
    "BACKEND",
    "det_eval",
    "det_eval_slog",
    "sturm_count",
    "bisect_spectrum",
    "plu_last_row",
]
