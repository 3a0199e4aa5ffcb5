"""Hot kernels: row-monomial composition, closure and multiplication tables.

The compiled extension is used when it was built; setting GMFLOWS_PURE=1 in
the environment forces the pure-Python fallback.
"""

import os

from . import pure as _pure

if os.environ.get("GMFLOWS_PURE") == "1":
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND
compose = _impl.compose
closure = _impl.closure
mult_table = _impl.mult_table

# Reference implementation, kept importable for the parity tests / benchmark.
pure = _pure
