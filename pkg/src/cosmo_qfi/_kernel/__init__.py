"""Backend selection for the mode-equation integrator.

The compiled Cython kernel is preferred when it was built; the pure-Python
twin is the fallback and can be forced with the COSMO_QFI_PURE environment
variable (any nonempty value).  Both expose the same two entry points:
`integrate_endpoint` and `integrate_pair_drift`.
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("COSMO_QFI_PURE"):
    impl = pure
else:
    try:
        from . import _mode_rk as impl  # type: ignore[no-redef]
    except ImportError:
        impl = pure

BACKEND = impl.BACKEND

STATUS_OK = pure.STATUS_OK
STATUS_MAX_STEPS = pure.STATUS_MAX_STEPS
STATUS_UNDERFLOW = pure.STATUS_UNDERFLOW
