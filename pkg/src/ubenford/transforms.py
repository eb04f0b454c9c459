"""Rescaling transforms and certified fractional-part evaluation.

The transforms map positive reals to the scale on which mantissa behaviour
becomes mod-1 behaviour: identity, log base b, iterated log (base 10 twice),
square root, and the area map pi*x**2. eval_transform computes u(x) for a
BigReal input with enough working precision that the fractional part is
certified: the value is evaluated at working precisions w and 2w and only
accepted when both agree on the leading fractional digits, with one extra
escalation when the result sits within the near-integer guard band.
"""

import math
from dataclasses import dataclass
from decimal import Decimal
from math import gcd, isqrt

from .bigreal import DEFAULT_POLICY, BigReal, _digits_abs
from .errors import CertificateViolation, DomainError, InsufficientPrecision, \
    PrecisionCapExceeded
from .kernels import ln2_fixed, ln10_fixed, ln_fixed, pi_fixed


@dataclass(frozen=True)
class Transform:
    """A rescaling map u. `base` is only meaningful for kind == "log"."""

    kind: str
    base: int = 10

    _KINDS = ("identity", "log", "loglog", "sqrt", "pi_square")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown transform kind {self.kind!r}")
        if self.kind == "log" and (not isinstance(self.base, int) or self.base < 2):
            raise ValueError("log base must be an integer >= 2")

    def label(self):
        if self.kind == "log":
            return f"log{self.base}"
        return self.kind

    @classmethod
    def parse(cls, text):
        t = text.strip().lower().replace("-", "_")
        if t in ("identity", "id"):
            return IDENTITY
        if t in ("loglog", "log_log"):
            return LOGLOG
        if t == "sqrt":
            return SQRT
        if t in ("pi_square", "pisquare", "pi_x2", "pix2"):
            return PI_SQUARE
        if t == "log":
            return LOG10
        if t.startswith("log") and t[3:].isdigit():
            return cls("log", int(t[3:]))
        raise ValueError(f"unknown transform {text!r}")


IDENTITY = Transform("identity")
LOG10 = Transform("log", 10)
LOG2 = Transform("log", 2)
LOGLOG = Transform("loglog")
SQRT = Transform("sqrt")
PI_SQUARE = Transform("pi_square")


# ---------------------------------------------------------------------------
# float-domain helpers (used for windows, grids and derivative bounds)

def u_float(transform, x):
    """u(x) in double precision; domain checks match eval_transform."""
    k = transform.kind
    if k == "identity":
        return float(x)
    if k == "log":
        if x <= 0:
            raise DomainError("log requires x > 0")
        return math.log(x) / math.log(transform.base)
    if k == "loglog":
        if x <= 1:
            raise DomainError("iterated log requires x > 1")
        return math.log10(math.log10(x))
    if k == "sqrt":
        if x < 0:
            raise DomainError("sqrt requires x >= 0")
        return math.sqrt(x)
    return math.pi * x * x


def u_inverse_float(transform, y):
    """x with u(x) = y, in double precision."""
    k = transform.kind
    if k == "identity":
        return float(y)
    if k == "log":
        return float(transform.base) ** y
    if k == "loglog":
        return 10.0 ** (10.0 ** y)
    if k == "sqrt":
        if y < 0:
            raise DomainError("sqrt image is nonnegative")
        return y * y
    if y < 0:
        raise DomainError("pi*x**2 image is nonnegative")
    return math.sqrt(y / math.pi)


def _pow10(y):
    try:
        return 10.0 ** y
    except OverflowError:
        return math.inf


def u_float_from_log10(transform, lg):
    """u(x) computed from lg = log10(x), never materializing a huge x.

    Values that genuinely overflow a double come back as inf.
    """
    k = transform.kind
    if k == "identity":
        return _pow10(lg)
    if k == "log":
        return lg / math.log10(transform.base)
    if k == "loglog":
        if lg <= 0:
            raise DomainError("iterated log requires x > 1")
        return math.log10(lg)
    if k == "sqrt":
        return _pow10(lg / 2.0)
    return math.pi * _pow10(2.0 * lg)


def u_inverse_log10(transform, y):
    """log10 of the preimage; stays finite where u_inverse_float overflows."""
    k = transform.kind
    if k == "identity":
        if y <= 0:
            raise DomainError("log10 of a nonpositive value")
        return math.log10(y)
    if k == "log":
        return y * math.log10(transform.base)
    if k == "loglog":
        return 10.0 ** y
    if k == "sqrt":
        if y <= 0:
            raise DomainError("log10 of a nonpositive value")
        return 2.0 * math.log10(y)
    if y <= 0:
        raise DomainError("log10 of a nonpositive value")
    return 0.5 * (math.log10(y) - math.log10(math.pi))


def derivative(transform, x):
    """u'(x) in double precision."""
    k = transform.kind
    if k == "identity":
        return 1.0
    if k == "log":
        if x <= 0:
            raise DomainError("log requires x > 0")
        return 1.0 / (x * math.log(transform.base))
    if k == "loglog":
        if x <= 1:
            raise DomainError("iterated log requires x > 1")
        return 1.0 / (x * math.log(x) * math.log(10.0))
    if k == "sqrt":
        if x <= 0:
            raise DomainError("sqrt derivative requires x > 0")
        return 0.5 / math.sqrt(x)
    return 2.0 * math.pi * x


# ---------------------------------------------------------------------------
# embedded reference: first 1000 fractional digits of pi

_PI_REFERENCE_1000 = (
    "14159265358979323846264338327950288419716939937510"
    "58209749445923078164062862089986280348253421170679"
    "82148086513282306647093844609550582231725359408128"
    "48111745028410270193852110555964462294895493038196"
    "44288109756659334461284756482337867831652712019091"
    "45648566923460348610454326648213393607260249141273"
    "72458700660631558817488152092096282925409171536436"
    "78925903600113305305488204665213841469519415116094"
    "33057270365759591953092186117381932611793105118548"
    "07446237996274956735188575272489122793818301194912"
    "98336733624406566430860213949463952247371907021798"
    "60943702770539217176293176752384674818467669405132"
    "00056812714526356082778577134275778960917363717872"
    "14684409012249534301465495853710507922796892589235"
    "42019956112129021960864034418159813629774771309960"
    "51870721134999999837297804995105973173281609631859"
    "50244594553469083026425223082533446850352619311881"
    "71010003137838752886587533208381420617177669147303"
    "59825349042875546873115956286388235378759375195778"
    "18577805321712268066130019278766111959092164201989"
)


def _int_str(v):
    # str() on ints is capped by the interpreter's digit limit; Decimal is not
    return str(Decimal(v))


def pi_digits(precision):
    """pi as a decimal string with `precision` fractional digits.

    Every call recomputes the digits and checks them against an embedded
    reference prefix; a mismatch raises CertificateViolation since it means
    the arithmetic core is broken.
    """
    if precision < 1:
        raise ValueError("precision must be >= 1")
    s = _int_str(pi_fixed(precision))
    frac = s[1:]
    n = min(precision, 1000)
    if s[0] != "3" or frac[:n] != _PI_REFERENCE_1000[:n]:
        raise CertificateViolation(
            "computed pi digits disagree with the embedded reference")
    return "3." + frac


def pi_bigreal(precision):
    """pi as a BigReal certified to `precision` significant digits."""
    return BigReal(pi_fixed(precision), -precision, precision + 1, False)


# ---------------------------------------------------------------------------
# exact fast paths

def _strip_power(v, b):
    j = 0
    while v > 1 and v % b == 0:
        v //= b
        j += 1
    return v, j


def _try_exact(x, transform):
    """Exact result when one is representable, else None."""
    k = transform.kind
    if k == "identity":
        return x
    if not x.exact:
        return None
    if k == "log":
        return _exact_log(x, transform.base)
    if k == "loglog":
        inner = _exact_log(x, 10)
        if inner is None or inner.exponent != 0:
            return None
        j = inner.mantissa
        if j < 1:
            return None
        return _exact_log(BigReal.from_int(j), 10)
    if k == "sqrt":
        m, e = x.mantissa, x.exponent
        if m == 0:
            return BigReal.from_int(0)
        if e % 2:
            m *= 10
            e -= 1
        r = isqrt(m)
        if r * r == m:
            return BigReal(r, e // 2, max(16, _digits_abs(r)), True)
        return None
    if k == "pi_square" and x.mantissa == 0:
        return BigReal.from_int(0)
    return None


def _exact_log(x, base):
    """log_base(x) when x is an exact integer power of base, else None."""
    num, den = x.mantissa, 1
    if x.exponent >= 0:
        num *= 10 ** x.exponent
    else:
        den = 10 ** (-x.exponent)
        g = gcd(num, den)
        num //= g
        den //= g
    if num == 1 and den == 1:
        return BigReal.from_int(0)
    if den == 1:
        v, j = _strip_power(num, base)
        return BigReal.from_int(j) if v == 1 else None
    if num == 1:
        v, j = _strip_power(den, base)
        return BigReal.from_int(-j) if v == 1 else None
    return None


# ---------------------------------------------------------------------------
# fixed-precision evaluation of one transform

_BASE_LN_CACHE = {}


def _ln_base_fixed(base, prec):
    if base == 2:
        return ln2_fixed(prec)
    if base == 10:
        return ln10_fixed(prec)
    key = (base, prec)
    v = _BASE_LN_CACHE.get(key)
    if v is None:
        d = _digits_abs(base)
        scaled = base * 10 ** (prec + 1 - d)
        v = ln_fixed(scaled, prec) + (d - 1) * ln10_fixed(prec)
        _BASE_LN_CACHE[key] = v
    return v


def _input_frac_limit(x, result_int_digits):
    """Fractional digits of u(x) supported by the input's own certification."""
    if x.exact:
        return 10 ** 9
    return x.significant_digits() - result_int_digits - 1


def _log_at(x, base, w):
    m, e = x.mantissa, x.exponent
    d = _digits_abs(m)
    if d <= w + 1:
        ms = m * 10 ** (w + 1 - d)
    else:
        ms = m // 10 ** (d - w - 1)
    lv = ln_fixed(ms, w)
    k = d - 1 + e  # x = mantissa_in_[1,10) * 10**k
    if k:
        lv += k * ln10_fixed(w)
    q = (lv * 10 ** w) // _ln_base_fixed(base, w)
    int_digits = max(0, _digits_abs(q) - w)
    frac_cert = w - (_digits_abs(k) + 2)
    frac_cert = min(frac_cert, _input_frac_limit(x, int_digits))
    return BigReal(q, -w, int_digits + frac_cert, False)


def _sqrt_at(x, w):
    m, e = x.mantissa, x.exponent
    if e % 2:
        m *= 10
        e -= 1
    r = isqrt(m * 10 ** (2 * w))
    int_digits = max(0, _digits_abs(r) + e // 2 - w)
    frac_cert = min(w - 1, _input_frac_limit(x, int_digits))
    return BigReal(r, e // 2 - w, int_digits + frac_cert, False)


def _pi_square_at(x, w):
    m, e = x.mantissa, x.exponent
    q = pi_fixed(w) * m * m
    int_digits = max(0, _digits_abs(q) + 2 * e - w)
    # absolute error <= x**2 * 10**-w from the truncated pi digits
    frac_cert = w - 2 * x.integer_digits() - 1
    frac_cert = min(frac_cert, _input_frac_limit(x, int_digits))
    return BigReal(q, 2 * e - w, int_digits + frac_cert, False)


def _eval_at(x, transform, w):
    k = transform.kind
    if k == "identity":
        return x
    if k == "log":
        return _log_at(x, transform.base, w)
    if k == "loglog":
        y = _log_at(x, 10, w + 4)
        if y.sign() <= 0:
            raise InsufficientPrecision(
                "inner log10 vanished at this working precision")
        return _log_at(y, 10, w)
    if k == "sqrt":
        return _sqrt_at(x, w)
    return _pi_square_at(x, w)


# ---------------------------------------------------------------------------
# escalating evaluation

def _check_domain(x, transform):
    k = transform.kind
    if k in ("log", "loglog") and x.sign() <= 0:
        raise DomainError(f"{transform.label()} requires x > 0")
    if k == "loglog" and x.compare_int(1) <= 0:
        raise DomainError("iterated log requires x > 1")
    if k in ("sqrt", "pi_square") and x.sign() < 0:
        raise DomainError(f"{transform.label()} requires x >= 0")


def _result_digits_estimate(x, transform):
    k = transform.kind
    if k == "log":
        return 8
    if k == "loglog":
        return 4
    i = x.integer_digits()
    if k == "sqrt":
        return i // 2 + 1
    if k == "pi_square":
        return 2 * i + 2
    return i


def eval_transform(x, transform, policy=DEFAULT_POLICY):
    """u(x) as a BigReal whose fractional part is certified.

    The result is evaluated at working precisions w and 2w and accepted only
    when both agree on the first `policy.agreement` fractional digits
    (modulo wraparound across an integer boundary). Near-integer results get
    one extra doubling before acceptance. Raises DomainError outside the
    transform's domain, InsufficientPrecision when the input's own
    certification cannot support the requested fractional digits, and
    PrecisionCapExceeded when escalation passes policy.cap.
    """
    _check_domain(x, transform)
    fast = _try_exact(x, transform)
    if fast is not None:
        return fast

    a = policy.agreement
    mod = 10 ** a
    band = 10 ** max(0, a - policy.near_integer_digits)
    w = max(policy.initial,
            _result_digits_estimate(x, transform) + policy.guard + a)
    escalated_for_near_integer = False
    while True:
        if 2 * w > policy.cap:
            raise PrecisionCapExceeded(
                f"needed working precision {2 * w} exceeds cap {policy.cap}")
        lo = _eval_at(x, transform, w)
        hi = _eval_at(x, transform, 2 * w)
        try:
            qlo = lo.frac_scaled(a)
            qhi = hi.frac_scaled(a)
        except InsufficientPrecision:
            if x.exact:
                w *= 2
                continue
            raise  # input-limited: escalating cannot help
        diff = (qhi - qlo) % mod
        if diff in (0, 1, mod - 1):
            near = qhi < band or qhi >= mod - band
            if near and not escalated_for_near_integer:
                escalated_for_near_integer = True
                w *= 2
                continue
            return hi
        w *= 2


def transform_frac(x, transform, policy=DEFAULT_POLICY):
    """Fractional part of u(x) as a certified double in [0, 1)."""
    return eval_transform(x, transform, policy).frac(policy.agreement)


def required_input_precision(transform, int_digits, frac_digits):
    """Significant input digits needed for `frac_digits` certified digits
    of the fractional part of u(x), given the input's integer digit count.

    Applies to inexact inputs; exact inputs are never limited.
    """
    k = transform.kind
    if k == "identity":
        return int_digits + frac_digits
    if k == "log":
        return frac_digits + 11
    if k == "loglog":
        return frac_digits + 16
    if k == "sqrt":
        return frac_digits + (int_digits + 1) // 2 + 3
    return frac_digits + 2 * int_digits + 4
