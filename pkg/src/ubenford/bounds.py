"""Distributional conformance: the law of {u(X)} and its certified bounds.

mod1_law sums exact cell probabilities P(u(X) in [j, j+z]) over the integer
cells that carry mass, working on a log10 abscissa so heavy tails never
overflow. discrepancy_bound turns the closed-form supremum of pdf/u' into
the certified ceiling 2*sup; certify_mod1_bound measures one against the
other and raises if the measurement ever crosses the ceiling.

The two fraction laws with explicit series (uniform and exponential inputs
under pi*x**2) get dedicated evaluators: an exact clamped-cell sum for the
uniform case and a direct-plus-tail-corrected sum for the exponential one,
each with its two-sided envelope.
"""

import math
from dataclasses import dataclass

import numpy as np

from .distributions import sup_ratio
from .errors import TruncationFailure, CertificateViolation
from .transforms import u_float_from_log10

_LN10 = math.log(10.0)
_SQRT_PI = math.sqrt(math.pi)
_EPS = float(np.finfo(np.float64).eps)
_CHUNK = 1 << 16


def default_z_grid():
    """1023 interior points, aligned so the quarter marks are exact."""
    return np.linspace(0.0, 1.0, 1025)[1:-1]


@dataclass(frozen=True)
class Mod1Result:
    """Measured law of {u(X)} on a z grid.

    error_budget bounds everything the measurement ignored: the two
    un-enumerated tails plus per-cell float rounding.
    """

    zs: np.ndarray
    probs: np.ndarray
    discrepancy: float
    worst_z: float
    cells: int
    error_budget: float


def _cell_edges_to_lg(transform, edges):
    """log10 of the preimages of u-space points; -inf below the image.

    Vectorized twin of transforms.u_inverse_log10.
    """
    k = transform.kind
    with np.errstate(divide="ignore", invalid="ignore"):
        if k == "identity":
            return np.where(edges > 0.0,
                            np.log10(np.maximum(edges, 1e-320)), -np.inf)
        if k == "log":
            return edges * math.log10(transform.base)
        if k == "loglog":
            return np.power(10.0, edges)
        if k == "sqrt":
            return np.where(edges > 0.0,
                            2.0 * np.log10(np.maximum(edges, 1e-320)),
                            -np.inf)
        return np.where(edges > 0.0,
                        0.5 * (np.log10(np.maximum(edges, 1e-320))
                               - math.log10(math.pi)), -np.inf)


def mod1_law(distribution, transform, zs=None, tail=1e-14,
             max_cells=5_000_000):
    """P({u(X)} <= z) for each z, summed cell by cell.

    The windowed support [ppf(tail), isf(tail)] fixes which integer cells
    of u are enumerated; everything outside contributes at most 2*tail,
    which lands in the returned error budget rather than in the numbers.
    """
    if zs is None:
        zs = default_z_grid()
    zs = np.asarray(zs, dtype=np.float64)
    if ((zs <= 0.0) | (zs >= 1.0)).any():
        raise ValueError("z grid must lie strictly inside (0, 1)")

    lg_lo = float(distribution.ppf_log10(tail))
    lg_hi = float(distribution.isf_log10(tail))
    if distribution.support_lo > 0.0:
        lg_lo = max(lg_lo, math.log10(distribution.support_lo))
    if math.isfinite(distribution.support_hi):
        lg_hi = min(lg_hi, math.log10(distribution.support_hi))
    if transform.kind == "loglog":
        # u is defined on x > 1 only; mass at or below 1 was rejected
        # upstream by the hypothesis checks
        lg_lo = max(lg_lo, 1e-300)

    u_lo = u_float_from_log10(transform, lg_lo)
    u_hi = u_float_from_log10(transform, lg_hi)
    if not (math.isfinite(u_lo) and math.isfinite(u_hi)):
        raise TruncationFailure(
            f"u image of the support window is not finite for "
            f"{distribution.label()} under {transform.label()}")
    j_lo = math.floor(u_lo)
    j_hi = math.floor(u_hi)
    cells = j_hi - j_lo + 1
    if cells > max_cells:
        raise TruncationFailure(
            f"{cells} integer cells exceed the budget of {max_cells} for "
            f"{distribution.label()} under {transform.label()}")

    probs = np.zeros_like(zs)
    for start in range(j_lo, j_hi + 1, _CHUNK):
        j = np.arange(start, min(start + _CHUNK, j_hi + 1),
                      dtype=np.float64)
        lg_left = _cell_edges_to_lg(transform, j)
        finite = np.isfinite(lg_left)
        cdf_left = np.zeros_like(j)
        sf_left = np.ones_like(j)
        if finite.any():
            cdf_left[finite] = distribution.cdf_log10(lg_left[finite])
            sf_left[finite] = distribution.sf_log10(lg_left[finite])
        use_sf = cdf_left >= 0.5
        for iz, z in enumerate(zs):
            lg_right = _cell_edges_to_lg(transform, j + z)
            cdf_right = distribution.cdf_log10(lg_right)
            p = np.where(use_sf,
                         sf_left - distribution.sf_log10(lg_right),
                         cdf_right - cdf_left)
            probs[iz] += float(np.sum(np.maximum(p, 0.0)))

    errs = np.abs(probs - zs)
    i = int(errs.argmax())
    budget = 2.0 * tail + 8.0 * cells * _EPS + 1e-15
    return Mod1Result(zs=zs, probs=probs, discrepancy=float(errs[i]),
                      worst_z=float(zs[i]), cells=cells,
                      error_budget=budget)


def discrepancy_bound(distribution, transform):
    """Certified ceiling 2*sup(pdf/u') for the mod-1 discrepancy."""
    m, _ = sup_ratio(distribution, transform)
    return 2.0 * m


@dataclass(frozen=True)
class BoundCertificate:
    discrepancy: float
    worst_z: float
    bound: float
    slack: float
    cells: int
    error_budget: float


def certify_mod1_bound(distribution, transform, zs=None, tail=1e-14,
                       max_cells=5_000_000):
    """Measure the law and check it against its ceiling.

    Raises CertificateViolation when the measured discrepancy exceeds
    bound + error budget; propagates NotUnimodal/HypothesisViolated when
    the ceiling itself does not exist.
    """
    bound = discrepancy_bound(distribution, transform)
    res = mod1_law(distribution, transform, zs=zs, tail=tail,
                   max_cells=max_cells)
    slack = bound + res.error_budget - res.discrepancy
    if slack < 0.0:
        raise CertificateViolation(
            f"discrepancy {res.discrepancy:.6e} exceeds bound {bound:.6e} "
            f"(+budget {res.error_budget:.2e}) for {distribution.label()} "
            f"under {transform.label()} at z={res.worst_z:.6f}")
    return BoundCertificate(discrepancy=res.discrepancy,
                            worst_z=res.worst_z, bound=bound, slack=slack,
                            cells=res.cells, error_budget=res.error_budget)


# ---------------------------------------------------------------------------
# fraction law of pi*X**2 for uniform input: exact clamped-cell series

def _check_delta(delta):
    if not (0.0 < delta < 1.0):
        raise ValueError("delta must lie strictly inside (0, 1)")


def p_delta_uniform(k, delta, max_cells=50_000_000):
    """P({pi*X**2} <= delta) for X uniform on (0, k], summed exactly.

    With a = k*sqrt(pi), cell j contributes (sqrt(min(j+delta, a**2)) -
    sqrt(j))/a; the top cell is clamped at the image boundary a**2.
    """
    _check_delta(delta)
    if not k > 0.0:
        raise ValueError("k must be positive")
    a = k * _SQRT_PI
    a2 = a * a
    n = math.ceil(a2)
    if n > max_cells:
        raise TruncationFailure(
            f"{n} cells exceed the budget of {max_cells} for k={k:g}")
    total = 0.0
    for start in range(0, n, _CHUNK * 16):
        j = np.arange(start, min(start + _CHUNK * 16, n), dtype=np.float64)
        total += float(np.sum(np.sqrt(np.minimum(j + delta, a2))
                              - np.sqrt(np.minimum(j, a2))))
    return total / a


def p_delta_uniform_envelope(k, delta):
    """Two-sided envelope for p_delta_uniform, valid for every k > 0."""
    _check_delta(delta)
    if not k > 0.0:
        raise ValueError("k must be positive")
    a = k * _SQRT_PI
    a2 = a * a
    top = math.floor(a2 - delta) + 1.0
    lower = (delta / a) * (math.sqrt(top + delta) - math.sqrt(delta))
    upper = math.sqrt(delta) / a + (delta / a) * math.sqrt(top)
    return lower, min(upper, 1.0)


# ---------------------------------------------------------------------------
# fraction law of pi*X**2 for exponential input: direct sum plus a
# tail-corrected remainder once the index budget runs out

def _exp_h(mu, j, delta):
    return np.exp(-mu * np.sqrt(j)) - np.exp(-mu * np.sqrt(j + delta))


def p_delta_exponential(lam, delta, direct_terms=100_000):
    """P({pi*X**2} <= delta) for X exponential with rate lam.

    Sums exp(-mu*sqrt(j)) - exp(-mu*sqrt(j+delta)) with mu = lam/sqrt(pi).
    When the series has not decayed after direct_terms entries the rest is
    folded in through the integral plus trapezoid and curvature
    corrections, accurate to ~1e-11 absolute.
    """
    _check_delta(delta)
    if not lam > 0.0:
        raise ValueError("lam must be positive")
    mu = lam / _SQRT_PI
    total = 0.0
    j0 = 0
    while j0 < direct_terms:
        j = np.arange(j0, min(j0 + _CHUNK * 4, direct_terms),
                      dtype=np.float64)
        terms = _exp_h(mu, j, delta)
        total += float(np.sum(terms))
        j0 = int(j[-1]) + 1
        if terms[-1] < 1e-18 * max(total, 1e-300):
            return total
    # remainder from j0 onward: integral + h/2 - h'/12
    J = float(j0)

    def antideriv(t):
        # integral of exp(-mu*sqrt(s)) ds from t to infinity
        r = mu * math.sqrt(t)
        return (2.0 / (mu * mu)) * (1.0 + r) * math.exp(-r)

    integral = antideriv(J) - antideriv(J + delta)
    hj = float(_exp_h(mu, np.asarray([J]), delta)[0])
    hprime = (-mu / (2.0 * math.sqrt(J)) * math.exp(-mu * math.sqrt(J))
              + mu / (2.0 * math.sqrt(J + delta))
              * math.exp(-mu * math.sqrt(J + delta)))
    return total + integral + hj / 2.0 - hprime / 12.0


def p_delta_exponential_envelope(lam, delta):
    """Two-sided envelope for p_delta_exponential."""
    _check_delta(delta)
    if not lam > 0.0:
        raise ValueError("lam must be positive")
    mu = lam / _SQRT_PI
    edge = math.exp(-mu * math.sqrt(delta))
    return delta * edge, min(1.0 - edge + delta, 1.0)
