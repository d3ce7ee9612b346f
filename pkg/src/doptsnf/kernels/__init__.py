"""Kernel backend selection: compiled extension when available, else pure Python.

Set ``DOPT_SNF_BACKEND=python`` to force the fallback, or ``=compiled`` to
insist on the extension (import then fails loudly if it was not built).
Both backends implement the same six entry points and are behaviorally
identical; tests enforce parity.
"""

import os

from . import pure

_CHOICE = os.environ.get("DOPT_SNF_BACKEND", "auto").strip().lower()

if _CHOICE in ("auto", ""):
    try:
        from . import _speedups as impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        impl = pure
        BACKEND = "python"
elif _CHOICE in ("python", "py", "pure"):
    impl = pure
    BACKEND = "python"
elif _CHOICE in ("compiled", "c", "cython"):
    from . import _speedups as impl  # type: ignore[attr-defined]

    BACKEND = "compiled"
else:
    raise RuntimeError(f"unknown DOPT_SNF_BACKEND value: {_CHOICE!r}")

matmul = impl.matmul
bareiss_determinant = impl.bareiss_determinant
adjugate = impl.adjugate
smith_reduce = impl.smith_reduce
gf_rank = impl.gf_rank
autocorrelations = impl.autocorrelations


def available_backends():
    """Name -> module for every importable backend (benchmarks, parity tests)."""
    found = {"python": pure}
    try:
        from . import _speedups  # type: ignore[attr-defined]

        found["compiled"] = _speedups
    except ImportError:
        pass
    return found
