"""Kernel backend selection.

The compiled extension is used when present; ``IDEALDEP_BACKEND=pure``
forces the pure-Python fallback (useful for benchmarking and debugging).
"""

import os

if os.environ.get("IDEALDEP_BACKEND", "").strip().lower() == "pure":
    from idealdep._kernel import pure as _impl
else:
    try:
        from idealdep._kernel import _speed as _impl  # type: ignore[no-redef]
    except ImportError:
        from idealdep._kernel import pure as _impl

BACKEND = _impl.BACKEND
GREVLEX_CODE = _impl.GREVLEX_CODE
LEX_CODE = _impl.LEX_CODE
BLOCK_CODE = _impl.BLOCK_CODE
mono_mul = _impl.mono_mul
mono_deg = _impl.mono_deg
mono_divides = _impl.mono_divides
mono_quotient = _impl.mono_quotient
mono_lcm = _impl.mono_lcm
cmp_mono = _impl.cmp_mono
addmul_terms = _impl.addmul_terms
reduce_full = _impl.reduce_full
rank_int = _impl.rank_int
echelon_int = _impl.echelon_int
rank_mod = _impl.rank_mod
echelon_mod = _impl.echelon_mod
