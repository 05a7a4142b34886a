"""Runtime caps, overridable through environment variables.

HECKEPOSET_CAP_N       largest n for which S_n objects may be built (default 12)
HECKEPOSET_CAP_DIM     largest module dimension for dense Hom solves (default 200)
"""

import os


def _int_env(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


CAP_N = _int_env("HECKEPOSET_CAP_N", 12)
CAP_DIM = _int_env("HECKEPOSET_CAP_DIM", 200)
