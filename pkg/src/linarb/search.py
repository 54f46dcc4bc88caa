"""Kernel selection: the compiled ``_csearch`` when importable, else ``_pysearch``.

Set ``LINARB_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pysearch

FOUND, INFEASIBLE, BUDGET = _pysearch.FOUND, _pysearch.INFEASIBLE, _pysearch.BUDGET

_csearch = None
if not os.environ.get("LINARB_PURE_PYTHON"):
    try:
        from . import _csearch
    except ImportError:
        _csearch = None

BACKEND = "cython" if _csearch is not None else "python"
search = _csearch.search if _csearch is not None else _pysearch.search
python_search = _pysearch.search
compiled_search = _csearch.search if _csearch is not None else None
