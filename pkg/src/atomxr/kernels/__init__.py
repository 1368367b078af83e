"""Hot-loop kernels for the runtime.

The compiled extension is used when it built successfully; otherwise the
pure-Python fallback takes over transparently.  ATOMXR_PURE_PYTHON=1
forces the fallback (used by the equivalence tests and the benchmark).
Both implementations are required to produce bit-identical results.
"""

from __future__ import annotations

import os

from atomxr.kernels import _fallback

if os.environ.get("ATOMXR_PURE_PYTHON") == "1":
    _impl = _fallback
else:
    try:
        from atomxr.kernels import _native as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _fallback

IMPLEMENTATION: str = _impl.IMPLEMENTATION
overlap_pairs = _impl.overlap_pairs
displace = _impl.displace

__all__ = ["IMPLEMENTATION", "displace", "overlap_pairs"]
