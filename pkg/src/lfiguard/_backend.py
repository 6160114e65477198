"""Kernel backend selection.

The compiled extension is preferred when importable; set LFIGUARD_PURE=1
to force the pure-Python kernels (useful for benchmarking and as a
fallback on platforms without a compiler).
"""

from __future__ import annotations

import os

from . import _core_py

if os.environ.get("LFIGUARD_PURE"):
    _impl = _core_py
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _core_py
        BACKEND = "python"

STATUS_INFEASIBLE = _core_py.STATUS_INFEASIBLE
STATUS_OPTIMAL = _core_py.STATUS_OPTIMAL
REL_LE = _core_py.REL_LE
REL_EQ = _core_py.REL_EQ
REL_GE = _core_py.REL_GE

solve_bb = _impl.solve_bb
sweep_cover_masks = _impl.sweep_cover_masks

solve_bb_py = _core_py.solve_bb
sweep_cover_masks_py = _core_py.sweep_cover_masks
