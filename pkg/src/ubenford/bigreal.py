"""Arbitrary-precision decimal reals with explicit certified precision.

A BigReal stores value = mantissa * 10**exponent together with the count of
significant decimal digits that are actually trustworthy. Exact values
(integers, finite decimals, binary doubles) are flagged and never lose
digits; inexact values carry their certification through arithmetic so that
frac() can refuse to hand out fractional digits it cannot vouch for.
"""

import math
from dataclasses import dataclass

from .errors import InsufficientPrecision
from .kernels import dec_digits

_FRAC_OUT_DIGITS = 24  # digits materialized when converting a frac to double
_ONE_MINUS = math.nextafter(1.0, 0.0)


@dataclass(frozen=True)
class PrecisionPolicy:
    """Knobs for certified evaluation.

    initial: working precision floor (decimal digits)
    guard: extra digits beyond the integer part of a result
    agreement: fractional digits two escalating evaluations must share
    cap: hard ceiling on working precision
    near_integer_digits: closeness to an integer that triggers one extra
        escalation before a fractional part is accepted
    """

    initial: int = 32
    guard: int = 15
    agreement: int = 12
    cap: int = 30000
    near_integer_digits: int = 12

    def __post_init__(self):
        if self.guard < 15:
            raise ValueError("guard digits must be >= 15")
        if self.agreement < 12:
            raise ValueError("agreement threshold must be >= 12")
        if self.cap < 2 * self.initial:
            raise ValueError("cap must leave room for escalation")


DEFAULT_POLICY = PrecisionPolicy()


def _digits_abs(m):
    return dec_digits(abs(m)) if m else 0


class BigReal:
    __slots__ = ("mantissa", "exponent", "precision", "exact")

    def __init__(self, mantissa, exponent, precision, exact):
        object.__setattr__(self, "mantissa", mantissa)
        object.__setattr__(self, "exponent", exponent)
        object.__setattr__(self, "precision", precision)
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, *_):
        raise AttributeError("BigReal is immutable")

    # ---- constructors -----------------------------------------------------

    @classmethod
    def from_int(cls, n):
        return cls(n, 0, max(16, _digits_abs(n)), True)

    @classmethod
    def from_decimal_string(cls, text):
        text = text.strip()
        sign = -1 if text.startswith("-") else 1
        body = text.lstrip("+-")
        if "." in body:
            whole, _, frac = body.partition(".")
            m = int((whole + frac) or "0") * sign
            return cls(m, -len(frac), max(16, _digits_abs(m)), True)
        return cls.from_int(sign * int(body or "0"))

    @classmethod
    def from_float(cls, x):
        # a double is m2 * 2**e2, i.e. an exact finite decimal
        if not math.isfinite(x):
            raise ValueError("BigReal requires a finite value")
        m2, e2 = x.as_integer_ratio()  # denominator e2 is a power of two
        k = e2.bit_length() - 1
        m = m2 * 5 ** k
        return cls(m, -k, max(16, _digits_abs(m)), True)

    # ---- structure --------------------------------------------------------

    def integer_digits(self):
        """Decimal digit count of the integer part (0 when |value| < 1)."""
        if self.mantissa == 0:
            return 0
        return max(0, _digits_abs(self.mantissa) + self.exponent)

    def significant_digits(self):
        """Certified significant digits (relative-error view of precision).

        For |value| >= 1 this is just `precision`; below 1 the leading
        zeros after the decimal point do not count.
        """
        if self.exact:
            return 10 ** 9
        if self.mantissa == 0:
            return 0
        # worst case over the decade: |value| as low as 10**(mag-1)
        mag = _digits_abs(self.mantissa) + self.exponent
        return self.precision - 1 + min(0, mag)

    def is_zero(self):
        return self.mantissa == 0

    def sign(self):
        return (self.mantissa > 0) - (self.mantissa < 0)

    def compare(self, other):
        """-1, 0, or 1; exact on the stored rationals."""
        if self.exponent >= other.exponent:
            a = self.mantissa * 10 ** (self.exponent - other.exponent)
            b = other.mantissa
        else:
            a = self.mantissa
            b = other.mantissa * 10 ** (other.exponent - self.exponent)
        return (a > b) - (a < b)

    def compare_int(self, n):
        return self.compare(BigReal.from_int(n))

    # ---- arithmetic -------------------------------------------------------

    def mul(self, other):
        m = self.mantissa * other.mantissa
        e = self.exponent + other.exponent
        if self.exact and other.exact:
            return BigReal(m, e, max(16, _digits_abs(m)), True)
        p = min(self._effective_precision(), other._effective_precision())
        return _truncated(m, e, p)

    def square(self):
        return self.mul(self)

    def add_int(self, n):
        """Exact shift by an integer; certification is preserved."""
        if self.exponent >= 0:
            m = self.mantissa * 10 ** self.exponent + n
            e = 0
        else:
            m = self.mantissa + n * 10 ** (-self.exponent)
            e = self.exponent
        if self.exact:
            return BigReal(m, e, max(16, _digits_abs(m)), True)
        p = self.precision + _digits_abs(m) - _digits_abs(self.mantissa)
        return BigReal(m, e, p, False)

    def _effective_precision(self):
        return self.precision if not self.exact else 10 ** 9

    # ---- fractional part --------------------------------------------------

    def _check_frac_precision(self, digits):
        if self.exact:
            return
        avail = self.precision - self.integer_digits()
        if avail < digits:
            raise InsufficientPrecision(
                f"{avail} certified fractional digits available, "
                f"{digits} requested")

    def _frac_digits(self, digits):
        if self.exponent >= 0:
            return 0
        scale = 10 ** (-self.exponent)
        r = self.mantissa % scale  # floor semantics for negatives
        if digits <= -self.exponent:
            return r // 10 ** (-self.exponent - digits)
        return r * 10 ** (digits + self.exponent)

    def frac_scaled(self, digits):
        """floor(frac(value) * 10**digits), certified or refused.

        Raises InsufficientPrecision when the stored precision cannot vouch
        for `digits` fractional digits.
        """
        self._check_frac_precision(digits)
        return self._frac_digits(digits)

    def frac(self, min_digits=12):
        """Fractional part in [0, 1) as a double.

        The result is certified to at least `min_digits` decimal digits;
        InsufficientPrecision is raised otherwise so the caller can
        regenerate the input at higher precision.
        """
        self._check_frac_precision(min_digits)
        q = self._frac_digits(_FRAC_OUT_DIGITS)
        # int/int true division rounds the exact rational once, so
        # short decimals come back bit-equal to their literals
        d = q / 10 ** _FRAC_OUT_DIGITS
        if d >= 1.0:
            return _ONE_MINUS
        if d < 0.0:
            return 0.0
        return d

    # ---- conversion -------------------------------------------------------

    def to_float(self):
        if self.mantissa == 0:
            return 0.0
        d = _digits_abs(self.mantissa)
        mag = d - 1 + self.exponent
        if mag > 308:
            return math.inf if self.mantissa > 0 else -math.inf
        if mag < -320:
            return 0.0
        shift = d - 17
        if shift > 0:
            m = self.mantissa // 10 ** shift
            e = self.exponent + shift
        else:
            m = self.mantissa
            e = self.exponent
        return float(m) * 10.0 ** e

    def __repr__(self):
        tag = "exact" if self.exact else f"p={self.precision}"
        return f"BigReal({self.mantissa}e{self.exponent}, {tag})"


def _truncated(m, e, p):
    """Keep p significant digits of m (truncation toward zero, <= 1 ulp)."""
    d = _digits_abs(m)
    if d > p > 0:
        cut = d - p
        q = abs(m) // 10 ** cut
        m = q if m > 0 else -q
        e += cut
    return BigReal(m, e, p, False)


def from_fixed(mantissa, prec, exponent10=0, precision=None, exact=False):
    """Wrap a fixed-point kernel result (value = mantissa/10**prec * 10**exp)."""
    return BigReal(mantissa, exponent10 - prec,
                   precision if precision is not None else prec, exact)
