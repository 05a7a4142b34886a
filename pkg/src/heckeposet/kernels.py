"""Backend selector for the hot kernels.

Tries the compiled extension first and falls back to the pure-Python
implementation.  Both expose the same three functions on the same bitmask
representation; tests assert they agree, and BACKEND reports which one won.
"""

try:
    from heckeposet._kernels_cy import (  # type: ignore[attr-defined]
        BACKEND,
        enumerate_posets,
        is_regular,
        linear_extension_words,
    )
except ImportError:
    from heckeposet._kernels_py import (
        BACKEND,
        enumerate_posets,
        is_regular,
        linear_extension_words,
    )

__all__ = ["BACKEND", "enumerate_posets", "linear_extension_words", "is_regular"]
