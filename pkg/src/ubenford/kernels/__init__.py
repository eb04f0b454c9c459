"""Kernel backend selection and constant caching.

The compiled extension is preferred when importable; set
``UBENFORD_PURE_PYTHON=1`` to force the reference backend. Both implement
the same integer algorithms and return bit-identical results.

Constants (pi, ln 2, ln 10, e) are computed once per power-of-two precision
bucket and sliced down by integer division: floor(floor(c*10^B)/10^(B-p))
equals floor(c*10^p), so every request at precision p <= B reuses the bucket
value deterministically, independent of call order or thread count.
"""

import os

if os.environ.get("UBENFORD_PURE_PYTHON"):
    from . import _pykernels as _impl
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        from . import _pykernels as _impl
        BACKEND = "python"

dec_digits = _impl.dec_digits
atan_inv = _impl.atan_inv
atanh_inv = _impl.atanh_inv
ln_fixed = _impl.ln_fixed
exp_fixed = _impl.exp_fixed
pow_fixed = _impl.pow_fixed


def _bucketed(fn):
    cache = {}

    def get(prec):
        if prec < 1:
            raise ValueError("precision must be >= 1")
        bucket = 1 << max(6, (prec - 1).bit_length())
        value = cache.get(bucket)
        if value is None:
            value = cache[bucket] = fn(bucket)
        return value // 10 ** (bucket - prec)

    get.__name__ = fn.__name__
    return get


pi_fixed = _bucketed(_impl.pi_fixed)
ln2_fixed = _bucketed(_impl.ln2_fixed)
ln10_fixed = _bucketed(_impl.ln10_fixed)
e_fixed = _bucketed(_impl.e_fixed)
