"""Density and CDF of the central Student's-t distribution.

Three CDF routes are kept deliberately redundant: the incomplete-beta form
(default, valid everywhere), two hypergeometric forms (cross-checks, each
restricted to where its series argument stays small), and the erfc-based
large-n representation (fast path for n >= 200).
"""
import math

from . import uniform_asym
from .specfun import gauss_2f1, inc_beta, ln_beta_fn

_ASYM_MIN_DF = 200.0
# guard band around x^2 = n where neither hypergeometric argument is <= 0.64
_HYP_LOW = 0.64
_HYP_HIGH = 1.5625


def pdf(n: float, t: float) -> float:
    """Density f_n(t), evaluated in log space to survive extreme t."""
    if not n > 0.0:
        raise ValueError(f"degrees of freedom must be positive, got {n}")
    at = abs(t)
    if at > 1e150:
        lg = 2.0 * math.log(at) - math.log(n)
    else:
        lg = math.log1p(t * t / n)
    expo = (-0.5 * (n + 1.0) * lg - 0.5 * math.log(n)
            - ln_beta_fn(0.5, 0.5 * n))
    if expo < -745.0:
        return 0.0
    return math.exp(expo)


def _lower_tail_incbeta(n: float, ax: float) -> float:
    """F_n(-ax) for ax >= 0, choosing the branch whose argument is <= 1/2."""
    if ax > 1e150:
        # x^2 may overflow; n/(n + x^2) = (n/ax)/ax to within 1e-300
        u = (n / ax) / ax
        return 0.5 * inc_beta(u, 0.5 * n, 0.5)
    x2 = ax * ax
    if x2 >= n:
        return 0.5 * inc_beta(n / (n + x2), 0.5 * n, 0.5)
    return 0.5 - 0.5 * inc_beta(x2 / (n + x2), 0.5, 0.5 * n)


def cdf_via_incbeta(n: float, x: float) -> float:
    """F_n(x) through the incomplete beta ratio; valid for every (n, x)."""
    if not n > 0.0:
        raise ValueError(f"degrees of freedom must be positive, got {n}")
    if x == 0.0:
        return 0.5
    lt = _lower_tail_incbeta(n, abs(x))
    return lt if x < 0.0 else 1.0 - lt


def cdf_via_2f1(n: float, x: float) -> float:
    """F_n(x) through the hypergeometric representations.

    The central form is used for x^2 <= 0.64 n and the tail forms for
    x^2 >= 1.5625 n; between those the series arguments approach 1 and the
    call is rejected (use cdf_via_incbeta there).
    """
    if not n > 0.0:
        raise ValueError(f"degrees of freedom must be positive, got {n}")
    if x == 0.0:
        return 0.5
    x2 = x * x
    if x2 <= _HYP_LOW * n:
        # Pfaff form of the central line: same 2F1 value, but the series in
        # y = x^2/(n+x^2) has positive terms, so no cancellation blow-up for
        # large n (the printed -x^2/n argument alternates with huge terms)
        y = x2 / (n + x2)
        hyp = gauss_2f1(0.5 * (n + 1.0), 1.0, 1.5, y)
        lpre = (-0.5 * (n + 1.0) * math.log1p(x2 / n)
                - 0.5 * math.log(n) - ln_beta_fn(0.5, 0.5 * n))
        return 0.5 + x * hyp * math.exp(lpre)
    if x2 >= _HYP_HIGH * n:
        # (1-y)^{n/2} y^{-1/2} / (n B),  y = x^2/(n + x^2), in log space
        lpre = (0.5 * n * math.log(n / (n + x2))
                - 0.5 * math.log(x2 / (n + x2))
                - math.log(n) - ln_beta_fn(0.5, 0.5 * n))
        hyp = gauss_2f1(1.0, 0.5, 0.5 * n + 1.0, -n / x2)
        tail = math.exp(lpre) * hyp if lpre > -745.0 else 0.0
        return tail if x < 0.0 else 1.0 - tail
    raise ValueError(
        f"hypergeometric forms need x^2 outside [{_HYP_LOW}n, {_HYP_HIGH}n]; "
        f"got x^2/n = {x2 / n:.4f}")


def cdf(n: float, x: float) -> float:
    """F_n(x).  Routing is a pure function of (n, x): the erfc-based
    representation for n >= 200, the incomplete-beta form otherwise."""
    if not n > 0.0:
        raise ValueError(f"degrees of freedom must be positive, got {n}")
    if n >= _ASYM_MIN_DF:
        return uniform_asym.cdf_uniform_asym(n, x, 5)
    return cdf_via_incbeta(n, x)


def sf(n: float, x: float) -> float:
    """Upper tail 1 - F_n(x), computed without cancellation via symmetry."""
    return cdf(n, -x)
