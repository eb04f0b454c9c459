"""Fixed-point big-integer kernels (pure Python reference backend).

Convention: a value at precision ``prec`` is the integer floor(v * 10**prec).
Every kernel carries its own guard digits internally and floors the result
back to the requested scale, so results are exact to <= a few ulp and
identical across backends (integer-only arithmetic, no platform drift).
"""

import math

_GUARD = 10

# ln 2 / ln 10 appear inside every ln/exp evaluation; memoize per exact scale
_LN_CACHE = {}


def dec_digits(n):
    """Decimal digit count of a positive integer, no string conversion."""
    if n <= 0:
        raise ValueError("dec_digits needs a positive integer")
    # 30103/100000 > log10(2), so the estimate never undershoots
    d = n.bit_length() * 30103 // 100000 + 1
    while d > 1 and 10 ** (d - 1) > n:
        d -= 1
    return d


def _gregory_sum(q, prec, hyperbolic):
    # Binary splitting for f(1/q) = sum_i s^i / ((2i+1) q^(2i+1)),
    # s = +1 (atanh) or -1 (atan). Invariant of split(a, b): the partial sum
    # over [a, b) times q^(2a+1) equals P/(R) with the q-powers folded into R.
    g = prec + _GUARD
    n_terms = int(g / (2 * math.log10(q))) + 2
    q2 = q * q

    def split(a, b):
        if b - a == 1:
            sign = 1 if (hyperbolic or a % 2 == 0) else -1
            return sign, 2 * a + 1
        m = (a + b) // 2
        p1, r1 = split(a, m)
        p2, r2 = split(m, b)
        shift = q2 ** (m - a)
        return p1 * r2 * shift + p2 * r1, r1 * r2 * shift

    p, r = split(0, n_terms)
    return (10 ** g * p) // (r * q) // 10 ** (g - prec)


def atan_inv(q, prec):
    """floor(atan(1/q) * 10**prec) for integer q >= 2."""
    return _gregory_sum(q, prec, False)


def atanh_inv(q, prec):
    """floor(atanh(1/q) * 10**prec) for integer q >= 2."""
    return _gregory_sum(q, prec, True)


def pi_fixed(prec):
    """floor(pi * 10**prec) via 16 atan(1/5) - 4 atan(1/239)."""
    g = prec + _GUARD
    v = 16 * atan_inv(5, g) - 4 * atan_inv(239, g)
    return v // 10 ** (g - prec)


def ln2_fixed(prec):
    key = (2, prec)
    v = _LN_CACHE.get(key)
    if v is None:
        g = prec + _GUARD
        v = _LN_CACHE[key] = 2 * atanh_inv(3, g) // 10 ** (g - prec)
    return v


def ln10_fixed(prec):
    # ln 10 = 3 ln 2 + ln(10/8) = 6 atanh(1/3) + 2 atanh(1/9)
    key = (10, prec)
    v = _LN_CACHE.get(key)
    if v is None:
        g = prec + _GUARD
        v = _LN_CACHE[key] = (6 * atanh_inv(3, g) + 2 * atanh_inv(9, g)) \
            // 10 ** (g - prec)
    return v


def e_fixed(prec):
    """floor(e * 10**prec) by direct factorial series."""
    g = prec + _GUARD
    term = 10 ** g
    total = term
    k = 1
    while term:
        term //= k
        total += term
        k += 1
    return total // 10 ** (g - prec)


def ln_fixed(m, prec):
    """floor(ln(m / 10**prec) * 10**prec) for a mantissa in [1, 10).

    Halve into [1, 2), take two integer square roots so the series argument
    t = (B-1)/(B+1) stays below 0.0866 (about 2.1 digits per term), then
    ln v = 8 atanh(t) + j ln 2.
    """
    g = prec + _GUARD
    one = 10 ** g
    m = m * 10 ** (g - prec)
    if not one <= m < 10 * one:
        raise ValueError("ln_fixed mantissa must lie in [1, 10)")
    j = 0
    while m >= 2 * one:
        m //= 2
        j += 1
    m = math.isqrt(m * one)
    m = math.isqrt(m * one)
    t = (m - one) * one // (m + one)
    t2 = t * t // one
    term = t
    total = t
    i = 1
    while term > 0:
        term = term * t2 // one
        total += term // (2 * i + 1)
        i += 1
    v = 8 * total + j * ln2_fixed(g)
    return v // 10 ** (g - prec)


def exp_fixed(x, prec):
    """e**(x / 10**prec) for x >= 0 as (mantissa, exponent10).

    The returned mantissa sits in [10**prec, 10**(prec+1)), i.e. the value is
    (mantissa / 10**prec) * 10**exponent10. Decades are peeled off with ln 10,
    the residual is halved below 2^-10, Taylor-summed, and squared back.
    """
    if x < 0:
        raise ValueError("exp_fixed needs x >= 0")
    g = prec + _GUARD
    one = 10 ** g
    x = x * 10 ** (g - prec)
    l10 = ln10_fixed(g)
    k = x // l10
    r = x - k * l10
    halvings = 0
    while r > one >> 10:
        r //= 2
        halvings += 1
    term = one
    total = one
    i = 1
    while term:
        term = term * r // one // i
        total += term
        i += 1
    for _ in range(halvings):
        total = total * total // one
    # e**residual lies in [1, 10) by construction
    return total // 10 ** (g - prec), int(k)


def pow_fixed(m, prec, n):
    """(m / 10**prec)**n for a mantissa in [1, 10), n >= 1, normalized.

    Binary powering with renormalization after every multiply; returns
    (mantissa, exponent10) in the same convention as exp_fixed.
    """
    if n < 1:
        raise ValueError("pow_fixed needs n >= 1")
    g = prec + _GUARD
    one = 10 ** g
    ten_one = 10 * one
    m = m * 10 ** (g - prec)
    if not one <= m < ten_one:
        raise ValueError("pow_fixed mantissa must lie in [1, 10)")
    acc, acc_e = one, 0
    base, base_e = m, 0
    while True:
        if n & 1:
            acc = acc * base // one
            acc_e += base_e
            if acc >= ten_one:
                acc //= 10
                acc_e += 1
        n >>= 1
        if not n:
            break
        base = base * base // one
        base_e *= 2
        if base >= ten_one:
            base //= 10
            base_e += 1
    return acc // 10 ** (g - prec), acc_e
