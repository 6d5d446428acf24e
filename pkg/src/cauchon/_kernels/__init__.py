"""Hot kernels, compiled when available.

``CAUCHON_PURE_PYTHON=1`` in the environment forces the pure-Python fallback.
Both backends stay importable by name for cross-checks and benchmarks.
"""

import os

from . import _pykernels

if os.environ.get("CAUCHON_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

rank = _impl.rank
diagram_kernel_dim = _impl.diagram_kernel_dim
dim_histogram = _impl.dim_histogram
echelon = _pykernels.echelon
admissible_rows = _pykernels.admissible_rows
iter_diagrams = _pykernels.iter_diagrams


def compiled():
    """The compiled module, or None when the extension is not built."""
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels
