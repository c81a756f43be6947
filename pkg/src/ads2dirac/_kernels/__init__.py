"""Backend selection for the series/recurrence kernels.

Imports the compiled extension when present, otherwise falls back to the
pure-Python implementation.  Set ADS2_FORCE_PYTHON=1 to skip the compiled
path (used by the benchmark and for debugging).
"""

import os

if os.environ.get("ADS2_FORCE_PYTHON"):
    from . import _impl_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _impl_cy as _impl

        BACKEND = "cython"
    except ImportError:
        from . import _impl_py as _impl

        BACKEND = "python"

hyp2f1_series = _impl.hyp2f1_series
hyp2f1_dc_sum = _impl.hyp2f1_dc_sum
ferrers_q_log_tail = _impl.ferrers_q_log_tail
jacobi_p_arr = _impl.jacobi_p_arr

__all__ = [
    "BACKEND",
    "hyp2f1_series",
    "hyp2f1_dc_sum",
    "ferrers_q_log_tail",
    "jacobi_p_arr",
]
