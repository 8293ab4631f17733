"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``SKILLPLAN_PURE=1`` in the environment to force the pure-Python kernel
(used by the parity tests and the benchmark).
"""

from __future__ import annotations

import os

from . import _mckp_py

# Bounds under which the compiled int64 kernel is exact. The dispatcher
# verifies the worst-case scaled profit sum against PROFIT_LIMIT with
# arbitrary-precision arithmetic before routing an instance here.
PROFIT_LIMIT = 2 ** 62
BUDGET_LIMIT = 2 ** 31

if os.environ.get("SKILLPLAN_PURE"):
    _compiled = None
else:
    try:
        from . import _mckp as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

HAVE_COMPILED = _compiled is not None


def kernel_name() -> str:
    return "compiled" if HAVE_COMPILED else "pure-python"


def solve_rows(weights, profits, budget, force_pure=False):
    if force_pure or _compiled is None:
        return _mckp_py.solve_rows(weights, profits, budget)
    return _compiled.solve_rows(weights, profits, budget)
