"""Backend selection for the F_2 elimination kernels.

Set HWGROUPS_F2_BACKEND=pure or =compiled to force a choice; by default
the compiled extension is used when importable and the pure fallback
otherwise.  Both expose the same functions with identical results.
"""

from __future__ import annotations

import os

_choice = os.environ.get("HWGROUPS_F2_BACKEND", "auto")
if _choice not in ("auto", "pure", "compiled"):
    raise ImportError(f"unknown HWGROUPS_F2_BACKEND value: {_choice!r}")

if _choice == "pure":
    from . import _f2pure as _impl
elif _choice == "compiled":
    from . import _f2core as _impl  # type: ignore[no-redef]
else:
    try:
        from . import _f2core as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _f2pure as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND
f2_rank = _impl.f2_rank
f2_rank_kernel = _impl.f2_rank_kernel

__all__ = ["BACKEND", "f2_rank", "f2_rank_kernel"]
