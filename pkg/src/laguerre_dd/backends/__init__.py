"""Kernel backend selection.

The compiled extension (`_fastcore`, Cython) is preferred when present;
otherwise the pure-Python reference (`pure`) is used.  Override with the
environment variable LAGUERRE_DD_BACKEND = auto | c | python.  Both
backends implement the same two functions and must produce identical
arrays; `tests/test_backends.py` pins the agreement.
"""

import os

_requested = os.environ.get("LAGUERRE_DD_BACKEND", "auto").strip().lower() or "auto"

if _requested in ("auto", "c", "cython", "compiled"):
    try:
        from . import _fastcore as _impl

        BACKEND = "c"
    except ImportError:
        if _requested != "auto":
            raise
        from . import pure as _impl

        BACKEND = "python"
elif _requested in ("py", "python", "pure"):
    from . import pure as _impl

    BACKEND = "python"
else:
    raise ValueError(
        f"unknown LAGUERRE_DD_BACKEND={_requested!r}; use auto, c or python"
    )

enumerate_group_rows = _impl.enumerate_group_rows
point_images = _impl.point_images


def available_backends() -> dict:
    """Importable backend modules by name (for tests and benchmarks)."""
    out = {}
    try:
        from . import _fastcore

        out["c"] = _fastcore
    except ImportError:
        pass
    from . import pure

    out["python"] = pure
    return out
