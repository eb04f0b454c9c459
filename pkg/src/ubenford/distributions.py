"""Positive continuous families with log10-stable tails and analytic
derivative-ratio suprema.

Each family exposes vectorized pdf/cdf/sf/ppf plus log10-domain variants
(cdf_log10 etc.) that stay finite where the plain forms overflow a double:
heavy Pareto tails at survival 1e-14 live thousands of decades up. The
supremum of pdf/u' over the support, the quantity the discrepancy bounds
are built from, has a closed form for every (family, transform) pair here;
a generic golden-section maximizer is provided as an independent route.
"""

import math

import numpy as np

from .errors import HypothesisViolated, InvalidParameter, NotUnimodal
from .special import erf, erfc, normal_cdf, normal_sf, probit

_LN10 = math.log(10.0)
_SQRT2 = math.sqrt(2.0)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)


def _as_array(x):
    return np.asarray(x, dtype=np.float64)


def _maybe_scalar(out, x):
    return out if np.ndim(x) else float(out)


class Distribution:
    """Base for positive continuous families.

    support_lo/support_hi bound the support; lo_closed marks whether the
    lower endpoint carries density (it matters for edge suprema).
    """

    name = "?"
    support_lo = 0.0
    support_hi = math.inf
    lo_closed = False
    density_positive_at_origin = False

    def label(self):
        return self.name

    def pdf(self, x):
        raise NotImplementedError

    def cdf(self, x):
        raise NotImplementedError

    def sf(self, x):
        x = _as_array(x)
        return _maybe_scalar(1.0 - self.cdf(x), x)

    def ppf(self, q):
        raise NotImplementedError

    def mean(self):
        raise NotImplementedError

    # log10-domain forms; subclasses override where the defaults overflow
    def cdf_log10(self, lg):
        lg = _as_array(lg)
        with np.errstate(over="ignore"):
            return _maybe_scalar(self.cdf(np.power(10.0, lg)), lg)

    def sf_log10(self, lg):
        lg = _as_array(lg)
        with np.errstate(over="ignore"):
            return _maybe_scalar(self.sf(np.power(10.0, lg)), lg)

    def ppf_log10(self, q):
        q = _as_array(q)
        return _maybe_scalar(np.log10(self.ppf(q)), q)

    def isf_log10(self, p):
        """log10 of the upper quantile with survival mass p."""
        p = _as_array(p)
        return _maybe_scalar(self.ppf_log10(1.0 - p), p)

    def sample(self, n, seed):
        return SeededSampler(self, seed).draw(n)

    # closed-form suprema of pdf(x)/u'(x); each returns (value, argmax)
    def sup_identity(self):
        raise NotImplementedError

    def sup_sqrt(self):
        raise NotImplementedError

    def sup_pi_square(self):
        if self.density_positive_at_origin:
            raise NotUnimodal(
                f"pdf/u' for pi*x**2 is unbounded near 0 for {self.label()}")
        raise NotImplementedError

    def sup_loglog(self):
        if self.support_lo < 1.0:
            raise HypothesisViolated(
                f"iterated log is undefined on part of the support of "
                f"{self.label()}")
        raise NotImplementedError

    def __repr__(self):
        return f"<{self.label()}>"


class ParetoI(Distribution):
    """Power tail starting at x0: sf(x) = (x0/x)**alpha for x >= x0."""

    lo_closed = True

    def __init__(self, alpha, x0=1.0):
        if not (alpha > 0) or not (x0 > 0):
            raise InvalidParameter("ParetoI needs alpha > 0 and x0 > 0")
        self.alpha = float(alpha)
        self.x0 = float(x0)
        self.support_lo = self.x0
        self.name = f"pareto_i(alpha={alpha:g}, x0={x0:g})"

    def pdf(self, x):
        x = _as_array(x)
        out = np.where(x >= self.x0,
                       self.alpha * self.x0 ** self.alpha
                       / np.maximum(x, self.x0) ** (self.alpha + 1.0), 0.0)
        return _maybe_scalar(out, x)

    def cdf(self, x):
        x = _as_array(x)
        out = np.where(x >= self.x0,
                       -np.expm1(self.alpha
                                 * np.log(self.x0 / np.maximum(x, self.x0))),
                       0.0)
        return _maybe_scalar(out, x)

    def sf(self, x):
        x = _as_array(x)
        out = np.where(x >= self.x0,
                       np.exp(self.alpha
                              * np.log(self.x0 / np.maximum(x, self.x0))),
                       1.0)
        return _maybe_scalar(out, x)

    def ppf(self, q):
        q = _as_array(q)
        with np.errstate(over="ignore"):
            out = self.x0 * np.exp(-np.log1p(-q) / self.alpha)
        return _maybe_scalar(out, q)

    def ppf_log10(self, q):
        q = _as_array(q)
        out = math.log10(self.x0) - np.log1p(-q) / (self.alpha * _LN10)
        return _maybe_scalar(out, q)

    def isf_log10(self, p):
        p = _as_array(p)
        out = math.log10(self.x0) - np.log(p) / (self.alpha * _LN10)
        return _maybe_scalar(out, p)

    def sf_log10(self, lg):
        lg = _as_array(lg)
        out = np.where(lg >= math.log10(self.x0),
                       np.exp(self.alpha * _LN10
                              * (math.log10(self.x0) - lg)), 1.0)
        return _maybe_scalar(out, lg)

    def cdf_log10(self, lg):
        lg = _as_array(lg)
        return _maybe_scalar(1.0 - self.sf_log10(lg), lg)

    def mean(self):
        if self.alpha <= 1.0:
            return math.inf
        return self.alpha * self.x0 / (self.alpha - 1.0)

    def sup_identity(self):
        # x*pdf = alpha*(x0/x)**alpha, decreasing: sup at the left edge
        return self.alpha, self.x0

    def sup_sqrt(self):
        return 2.0 * self.alpha / math.sqrt(self.x0), self.x0

    def sup_pi_square(self):
        return self.alpha / (2.0 * math.pi * self.x0 * self.x0), self.x0

    def sup_loglog(self):
        if self.x0 < 1.0:
            raise HypothesisViolated(
                "iterated log is undefined on part of the support of "
                f"{self.label()}")
        # ratio = ln(10)*alpha*x0^alpha * ln(x)/x^alpha peaks at e^(1/alpha)
        xs = max(self.x0, math.exp(1.0 / self.alpha))
        val = (_LN10 * self.alpha * self.x0 ** self.alpha
               * math.log(xs) / xs ** self.alpha)
        return val, xs


class ParetoII(Distribution):
    """Lomax: sf(x) = (1 + x)**-b on x >= 0."""

    density_positive_at_origin = True

    def __init__(self, b):
        if not (b > 0):
            raise InvalidParameter("ParetoII needs b > 0")
        self.b = float(b)
        self.name = f"pareto_ii(b={b:g})"

    def pdf(self, x):
        x = _as_array(x)
        out = np.where(x >= 0.0,
                       self.b * np.exp(-(self.b + 1.0)
                                       * np.log1p(np.maximum(x, 0.0))), 0.0)
        return _maybe_scalar(out, x)

    def cdf(self, x):
        x = _as_array(x)
        out = np.where(x >= 0.0,
                       -np.expm1(-self.b * np.log1p(np.maximum(x, 0.0))),
                       0.0)
        return _maybe_scalar(out, x)

    def sf(self, x):
        x = _as_array(x)
        out = np.where(x >= 0.0,
                       np.exp(-self.b * np.log1p(np.maximum(x, 0.0))), 1.0)
        return _maybe_scalar(out, x)

    def ppf(self, q):
        q = _as_array(q)
        with np.errstate(over="ignore"):
            out = np.expm1(-np.log1p(-q) / self.b)
        return _maybe_scalar(out, q)

    def ppf_log10(self, q):
        q = _as_array(q)
        with np.errstate(over="ignore", divide="ignore"):
            out = np.log10(np.expm1(-np.log1p(-q) / self.b))
            # far in the upper tail, 1 + x ~ x: switch to the exact log form
            big = -np.log1p(-q) / self.b > 300.0 * _LN10
            out = np.where(big, -np.log1p(-q) / (self.b * _LN10), out)
        return _maybe_scalar(out, q)

    def isf_log10(self, p):
        p = _as_array(p)
        t = -np.log(p) / self.b  # ln(1+x)
        with np.errstate(over="ignore"):
            out = np.where(t > 300.0 * _LN10, t / _LN10,
                           np.log10(np.expm1(np.minimum(t, 700.0))))
        return _maybe_scalar(out, p)

    def sf_log10(self, lg):
        lg = _as_array(lg)
        # ln(1 + 10^lg) without overflow
        ln1px = np.where(lg > 30.0, lg * _LN10,
                         np.log1p(np.power(10.0, np.minimum(lg, 30.0))))
        return _maybe_scalar(np.exp(-self.b * ln1px), lg)

    def cdf_log10(self, lg):
        lg = _as_array(lg)
        return _maybe_scalar(1.0 - self.sf_log10(lg), lg)

    def mean(self):
        return math.inf if self.b <= 1.0 else 1.0 / (self.b - 1.0)

    def sup_identity(self):
        xs = 1.0 / self.b
        return (self.b / (1.0 + self.b)) ** (self.b + 1.0), xs

    def sup_sqrt(self):
        xs = 1.0 / (2.0 * self.b + 1.0)
        return 2.0 * self.b * math.sqrt(xs) / (1.0 + xs) ** (self.b + 1.0), xs


class LognormalBase10(Distribution):
    """log10(X) ~ Normal(mu, sigma**2)."""

    def __init__(self, mu, sigma):
        if not (sigma > 0):
            raise InvalidParameter("LognormalBase10 needs sigma > 0")
        self.mu = float(mu)
        self.sigma = float(sigma)
        self.name = f"lognormal10(mu={mu:g}, sigma={sigma:g})"

    def pdf(self, x):
        x = _as_array(x)
        safe = np.maximum(x, 1e-320)
        z = (np.log10(safe) - self.mu) / self.sigma
        out = np.where(x > 0.0,
                       np.exp(-0.5 * z * z)
                       / (safe * self.sigma * _LN10 * math.sqrt(2 * math.pi)),
                       0.0)
        return _maybe_scalar(out, x)

    def cdf(self, x):
        x = _as_array(x)
        safe = np.maximum(x, 1e-320)
        out = np.where(x > 0.0, normal_cdf(
            (np.log10(safe) - self.mu) / self.sigma), 0.0)
        return _maybe_scalar(out, x)

    def sf(self, x):
        x = _as_array(x)
        safe = np.maximum(x, 1e-320)
        out = np.where(x > 0.0, normal_sf(
            (np.log10(safe) - self.mu) / self.sigma), 1.0)
        return _maybe_scalar(out, x)

    def ppf(self, q):
        q = _as_array(q)
        with np.errstate(over="ignore"):
            out = np.power(10.0, self.mu + self.sigma * probit(q))
        return _maybe_scalar(out, q)

    def ppf_log10(self, q):
        q = _as_array(q)
        return _maybe_scalar(self.mu + self.sigma * probit(q), q)

    def isf_log10(self, p):
        p = _as_array(p)
        return _maybe_scalar(self.mu - self.sigma * probit(p), p)

    def cdf_log10(self, lg):
        lg = _as_array(lg)
        return _maybe_scalar(normal_cdf((lg - self.mu) / self.sigma), lg)

    def sf_log10(self, lg):
        lg = _as_array(lg)
        return _maybe_scalar(normal_sf((lg - self.mu) / self.sigma), lg)

    def mean(self):
        return math.exp(self.mu * _LN10 + 0.5 * (self.sigma * _LN10) ** 2)

    def _pdf_scalar(self, x):
        return float(self.pdf(np.asarray([x]))[0])

    def sup_identity(self):
        # x*pdf peaks where log10 x = mu
        xs = 10.0 ** self.mu
        return 1.0 / (self.sigma * _LN10 * math.sqrt(2 * math.pi)), xs

    def sup_sqrt(self):
        xs = 10.0 ** (self.mu - 0.5 * self.sigma ** 2 * _LN10)
        return 2.0 * math.sqrt(xs) * self._pdf_scalar(xs), xs

    def sup_pi_square(self):
        xs = 10.0 ** (self.mu - 2.0 * self.sigma ** 2 * _LN10)
        return self._pdf_scalar(xs) / (2.0 * math.pi * xs), xs


class UniformOnZeroK(Distribution):
    """Uniform on (0, k]."""

    density_positive_at_origin = True

    def __init__(self, k):
        if not (k > 0):
            raise InvalidParameter("UniformOnZeroK needs k > 0")
        self.k = float(k)
        self.support_hi = self.k
        self.name = f"uniform(0,{k:g}]"

    def pdf(self, x):
        x = _as_array(x)
        out = np.where((x > 0.0) & (x <= self.k), 1.0 / self.k, 0.0)
        return _maybe_scalar(out, x)

    def cdf(self, x):
        x = _as_array(x)
        return _maybe_scalar(np.clip(x / self.k, 0.0, 1.0), x)

    def ppf(self, q):
        q = _as_array(q)
        return _maybe_scalar(q * self.k, q)

    def mean(self):
        return 0.5 * self.k

    def sup_identity(self):
        return 1.0, self.k

    def sup_sqrt(self):
        return 2.0 / math.sqrt(self.k), self.k


class Exponential(Distribution):
    """Rate lam: sf(x) = exp(-lam*x)."""

    density_positive_at_origin = True

    def __init__(self, lam):
        if not (lam > 0):
            raise InvalidParameter("Exponential needs lam > 0")
        self.lam = float(lam)
        self.name = f"exponential(lam={lam:g})"

    def pdf(self, x):
        x = _as_array(x)
        out = np.where(x >= 0.0,
                       self.lam * np.exp(-self.lam * np.maximum(x, 0.0)), 0.0)
        return _maybe_scalar(out, x)

    def cdf(self, x):
        x = _as_array(x)
        out = np.where(x >= 0.0, -np.expm1(-self.lam * np.maximum(x, 0.0)),
                       0.0)
        return _maybe_scalar(out, x)

    def sf(self, x):
        x = _as_array(x)
        out = np.where(x >= 0.0, np.exp(-self.lam * np.maximum(x, 0.0)), 1.0)
        return _maybe_scalar(out, x)

    def ppf(self, q):
        q = _as_array(q)
        return _maybe_scalar(-np.log1p(-q) / self.lam, q)

    def mean(self):
        return 1.0 / self.lam

    def isf_log10(self, p):
        p = _as_array(p)
        out = np.log10(-np.log(p) / self.lam)
        return _maybe_scalar(out, p)

    def sup_identity(self):
        # x*pdf peaks at 1/lam with value 1/e
        return 1.0 / math.e, 1.0 / self.lam

    def sup_sqrt(self):
        return math.sqrt(2.0 * self.lam / math.e), 0.5 / self.lam

    def sup_f(self):
        """Plain sup of the density (at the closed origin edge)."""
        return self.lam, 0.0


class HalfNormal(Distribution):
    """|Normal(0, sigma**2)|."""

    lo_closed = True
    density_positive_at_origin = True

    def __init__(self, sigma):
        if not (sigma > 0):
            raise InvalidParameter("HalfNormal needs sigma > 0")
        self.sigma = float(sigma)
        self.name = f"half_normal(sigma={sigma:g})"

    def pdf(self, x):
        x = _as_array(x)
        z = np.maximum(x, 0.0) / self.sigma
        out = np.where(x >= 0.0,
                       _SQRT_2_OVER_PI / self.sigma * np.exp(-0.5 * z * z),
                       0.0)
        return _maybe_scalar(out, x)

    def cdf(self, x):
        x = _as_array(x)
        out = np.where(x >= 0.0,
                       erf(np.maximum(x, 0.0) / (self.sigma * _SQRT2)), 0.0)
        return _maybe_scalar(out, x)

    def sf(self, x):
        x = _as_array(x)
        out = np.where(x >= 0.0,
                       erfc(np.maximum(x, 0.0) / (self.sigma * _SQRT2)), 1.0)
        return _maybe_scalar(out, x)

    def ppf(self, q):
        q = _as_array(q)
        out = self.sigma * probit((1.0 + q) / 2.0)
        return _maybe_scalar(out, q)

    def ppf_log10(self, q):
        # probit((1+q)/2) loses all resolution once q/2 dips below the
        # spacing of doubles at 0.5; switch to the linearization
        # probit(1/2 + h) ~ h*sqrt(2*pi) there
        q = _as_array(q)
        direct = self.sigma * probit((1.0 + q) / 2.0)
        with np.errstate(divide="ignore"):
            lg = np.where(
                q < 1e-12,
                np.log10(self.sigma * q * (_SQRT_2PI / 2.0)),
                np.log10(np.maximum(direct, 1e-320)))
        return _maybe_scalar(lg, q)

    def isf_log10(self, p):
        # -probit(p/2) keeps the tail resolved where 1 - p/2 rounds to 1
        p = _as_array(p)
        out = np.log10(self.sigma * -probit(p / 2.0))
        return _maybe_scalar(out, p)

    def mean(self):
        return self.sigma * _SQRT_2_OVER_PI

    def sup_identity(self):
        return _SQRT_2_OVER_PI * math.exp(-0.5), self.sigma

    def sup_sqrt(self):
        xs = self.sigma / _SQRT2
        return (2.0 * _SQRT_2_OVER_PI * math.exp(-0.25) * 2.0 ** -0.25
                / math.sqrt(self.sigma)), xs


DISTRIBUTIONS = {
    "pareto_i": ParetoI,
    "pareto_ii": ParetoII,
    "lognormal10": LognormalBase10,
    "uniform": UniformOnZeroK,
    "exponential": Exponential,
    "half_normal": HalfNormal,
}


def parse_distribution(text):
    """"name:arg1,arg2" with positional numeric arguments."""
    t = text.strip().lower()
    head, _, argpart = t.partition(":")
    if head not in DISTRIBUTIONS:
        raise InvalidParameter(f"unknown distribution {text!r}")
    args = [float(a) for a in argpart.split(",") if a] if argpart else []
    try:
        return DISTRIBUTIONS[head](*args)
    except TypeError as exc:
        raise InvalidParameter(f"bad arguments for {head}: {exc}") from None


# ---------------------------------------------------------------------------
# deterministic sampling: counter-based splitmix64 through the inverse CDF

_GOLDEN_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


class SeededSampler:
    """Reproducible sampler: draw k is a pure function of (seed, k).

    Uniform variates come from splitmix64 evaluated at consecutive counter
    values, mapped to (0, 1) open on both sides, then pushed through the
    family's inverse CDF. Streams are stateless apart from the counter, so
    any prefix of a stream is independent of how it was chunked.
    """

    def __init__(self, distribution, seed):
        if not (0 <= int(seed) < 2 ** 64):
            raise InvalidParameter("seed must fit in 64 bits")
        self.distribution = distribution
        self.seed = int(seed)
        self._counter = 0

    def uniforms(self, n):
        if n < 0:
            raise InvalidParameter("draw count must be nonnegative")
        idx = np.arange(self._counter + 1, self._counter + n + 1,
                        dtype=np.uint64)
        self._counter += n
        z = np.uint64(self.seed) + idx * _GOLDEN_GAMMA
        z ^= z >> np.uint64(30)
        z *= _MIX1
        z ^= z >> np.uint64(27)
        z *= _MIX2
        z ^= z >> np.uint64(31)
        return ((z >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0 ** -53

    def draw(self, n):
        return self.distribution.ppf(self.uniforms(n))


# ---------------------------------------------------------------------------
# sup of pdf/u' over the support: closed forms plus a numeric cross-route

def sup_ratio(distribution, transform):
    """(sup of pdf/u', argmax) for the discrepancy bounds.

    Raises NotUnimodal when the ratio is unbounded (pi*x**2 with density
    reaching the origin) and HypothesisViolated when u is undefined on part
    of the support (iterated log with mass at or below 1).
    """
    k = transform.kind
    if k == "identity":
        if isinstance(distribution, Exponential):
            return distribution.sup_f()
        if isinstance(distribution, UniformOnZeroK):
            # flat density: sup f attained everywhere on (0, k]
            return 1.0 / distribution.k, distribution.k
        if isinstance(distribution, ParetoII):
            # decreasing density: sup f at the origin edge
            return distribution.b, 0.0
        if isinstance(distribution, ParetoI):
            return (distribution.alpha / distribution.x0,
                    distribution.x0)
        if isinstance(distribution, HalfNormal):
            return _SQRT_2_OVER_PI / distribution.sigma, 0.0
        if isinstance(distribution, LognormalBase10):
            xs = 10.0 ** (distribution.mu
                          - distribution.sigma ** 2 * _LN10)
            return distribution._pdf_scalar(xs), xs
        raise NotImplementedError
    if k == "log":
        m, xs = distribution.sup_identity()
        return m * math.log(transform.base), xs
    if k == "sqrt":
        return distribution.sup_sqrt()
    if k == "pi_square":
        return distribution.sup_pi_square()
    if k == "loglog":
        return distribution.sup_loglog()
    raise InvalidParameter(f"no ratio rule for transform {k!r}")


def sup_scale_ratio(distribution):
    """(sup of x*pdf(x), argmax): the constant behind log-scale bounds."""
    return distribution.sup_identity()


def _uprime_np(transform, x):
    k = transform.kind
    if k == "identity":
        return np.ones_like(x)
    if k == "log":
        return 1.0 / (x * math.log(transform.base))
    if k == "loglog":
        return 1.0 / (x * np.log(x) * _LN10)
    if k == "sqrt":
        return 0.5 / np.sqrt(x)
    return 2.0 * math.pi * x


def sup_ratio_numeric(distribution, transform, rel_tol=1e-10):
    """Golden-section maximum of pdf/u' on a log-x axis.

    Independent of the closed forms; used to cross-validate them. The scan
    window stretches well past both 1e-13 quantiles, and a window-edge
    maximum that keeps growing as the window widens raises NotUnimodal.
    """
    if transform.kind == "loglog" and distribution.support_lo < 1.0:
        raise HypothesisViolated(
            "iterated log is undefined on part of the support of "
            f"{distribution.label()}")

    def val(lg):
        x = 10.0 ** lg
        return float(distribution.pdf(np.asarray([x]))[0]
                     / _uprime_np(transform, np.asarray([x]))[0])

    lg_lo = float(distribution.ppf_log10(1e-13))
    lg_hi = float(distribution.isf_log10(1e-13))
    if distribution.support_lo > 0.0:
        lg_lo = max(lg_lo, math.log10(distribution.support_lo))
    if transform.kind == "loglog":
        lg_lo = max(lg_lo, 1e-12)
    if math.isfinite(distribution.support_hi):
        lg_hi = min(lg_hi, math.log10(distribution.support_hi))

    lo_is_support_edge = (distribution.support_lo > 0.0 and
                          abs(lg_lo - math.log10(max(distribution.support_lo,
                                                     1e-300))) < 1e-12)
    hi_is_support_edge = math.isfinite(distribution.support_hi)

    # A window-edge maximum is read three ways: equal value ten decades
    # further out is an asymptotic plateau (accept the edge as the sup), a
    # different value means the true peak sits outside (widen and rescan),
    # and a window that keeps needing to widen means the ratio diverges.
    for attempt in range(7):
        grid = np.linspace(lg_lo, lg_hi, 601)
        vals = np.array([val(t) for t in grid])
        i = int(vals.argmax())
        if i == 0 and not lo_is_support_edge:
            probe = val(lg_lo - 10.0)
            if abs(probe - vals[0]) <= 1e-9 * max(vals[0], 1e-300):
                break  # plateau toward the lower edge
            lg_lo -= 10.0
            continue
        if i == len(grid) - 1 and not hi_is_support_edge:
            probe = val(lg_hi + 10.0)
            if abs(probe - vals[-1]) <= 1e-9 * max(vals[-1], 1e-300):
                break
            lg_hi += 10.0
            continue
        break
    else:
        raise NotUnimodal(
            f"pdf/u' keeps growing toward the support edge for "
            f"{distribution.label()} under {transform.label()}")

    a = grid[max(i - 1, 0)]
    b = grid[min(i + 1, len(grid) - 1)]
    if a == b:
        return vals[i], 10.0 ** grid[i]
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = val(c), val(d)
    for _ in range(200):
        if b - a < rel_tol * (1.0 + abs(a) + abs(b)):
            break
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = val(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = val(d)
    t = 0.5 * (a + b)
    return val(t), 10.0 ** t
