"""Inversion of the t CDF: solve F_n(x) = p.

Four seed methods cover the (n, p) plane -- a central power series in
q = (p - 1/2) sqrt(n) B(1/2, n/2), a two-map fixed-point iteration, a
left-tail series in delta = (p n B)^{2/n}, and inversion of the erfc-based
representation -- plus a Newton polish step driven by tcdf.cdf/pdf.

All series coefficients in this module are frozen outputs of
scripts/derive_coefficients.py, which re-derives them from the defining
equations and cross-checks the closed forms against the series.
"""
import enum
import math
from dataclasses import dataclass

from . import tcdf
from .specfun import beta_fn, inverfc, ln_beta_fn
from .uniform_asym import g, g_double_prime, g_prime, x_from_xi

# dispatcher region thresholds
_DELTA_MAX = 0.3
_Q_MAX_CENTRAL = 0.8
_Q_MAX_FIXED = 1.5
_XI0_SERIES_CUTOFF = 0.6

_POLISH_TOL = 1e-14


class Method(enum.Enum):
    CentralSeries = "central"
    FixedPoint = "fixed"
    LeftTail = "tail"
    RightTail = "tail-mirrored"
    UniformAsym = "asym"
    OracleFallback = "oracle"


class OutOfRegionError(ValueError):
    """Requested seed method is outside its validity region."""


class DivergenceError(OutOfRegionError):
    """Fixed-point iterate left [0, 1)."""


class PolishFailedError(RuntimeError):
    """Newton polish could not bracket the root; carries the best x seen."""

    def __init__(self, msg, best_x):
        super().__init__(msg)
        self.best_x = best_x


@dataclass(frozen=True)
class QuantileResult:
    x: float
    method: Method
    polished: bool
    est_rel_error: float


@dataclass(frozen=True)
class TailSeriesVars:
    """Left-tail inversion variables: eta = n/x^2, delta = (p n B)^{2/n}."""
    eta: float
    delta: float
    log_delta: float


def _tail_residual(n: float, p: float, x: float) -> float:
    """|F_n(x) - p| / min(p, 1-p), with the smaller tail evaluated directly."""
    if p <= 0.5:
        return abs(tcdf.cdf(n, x) - p) / p
    q = 1.0 - p  # exact for p >= 1/2
    return abs(tcdf.cdf(n, -x) - q) / q


def _result(n, p, x, method, polished=False):
    return QuantileResult(x=x, method=method, polished=polished,
                          est_rel_error=_tail_residual(n, p, x))


def _validate(n: float, p: float):
    if not n > 0.0:
        raise ValueError(f"degrees of freedom must be positive, got {n}")
    if not 0.0 < p < 1.0:
        raise ValueError(f"probability must lie strictly in (0,1), got {p}")


# --- central series -----------------------------------------------------

def _central_coeffs(n: float):
    x1 = (n + 1.0) / (6.0 * n)
    x2 = (n + 1.0) * (7.0 * n + 1.0) / (120.0 * n * n)
    x3 = (n + 1.0) * (127.0 * n * n + 8.0 * n + 1.0) / (5040.0 * n ** 3)
    x4 = (n + 1.0) * ((4369.0 * n - 537.0) * n * n + 135.0 * n + 1.0) \
        / (362880.0 * n ** 4)
    return x1, x2, x3, x4


def central_q(n: float, p: float) -> float:
    """q = (p - 1/2) sqrt(n) B(1/2, n/2), the central inversion variable."""
    return (p - 0.5) * math.sqrt(n) * beta_fn(0.5, 0.5 * n)


def inv_central_series(n: float, p: float, q_max: float = _Q_MAX_CENTRAL) -> QuantileResult:
    """x = q (1 + x1 q^2 + x2 q^4 + x3 q^6 + x4 q^8) for small |q|."""
    _validate(n, p)
    q = central_q(n, p)
    if abs(q) > q_max:
        raise OutOfRegionError(f"|q| = {abs(q):.3f} exceeds q_max = {q_max}")
    x1, x2, x3, x4 = _central_coeffs(n)
    q2 = q * q
    x = q * (1.0 + q2 * (x1 + q2 * (x2 + q2 * (x3 + q2 * x4))))
    return _result(n, p, x, Method.CentralSeries)


# --- fixed point --------------------------------------------------------

def _fp_map(y: float, n: float, b2dp2: float) -> float:
    """One application of the high-order map h; b2dp2 = (p - 1/2)^2 B^2."""
    num = 225.0 * b2dp2 * math.exp(-n * math.log1p(-y))
    den = y * y * (n * n + 4.0 * n + 3.0) + 5.0 * y * (n + 1.0) + 15.0
    return num / (den * den)


def inv_fixed_point(n: float, p: float, iterations: int = 2) -> QuantileResult:
    """Iterate y <- h(y) from y = 0, then x = sqrt(n y/(1-y)).

    Defined for p > 1/2; p < 1/2 is handled by reflection.
    """
    _validate(n, p)
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if p == 0.5:
        return _result(n, p, 0.0, Method.FixedPoint)
    pp = max(p, 1.0 - p)
    b = beta_fn(0.5, 0.5 * n)
    b2dp2 = (pp - 0.5) ** 2 * b * b
    y = 0.0
    for _ in range(iterations):
        try:
            y = _fp_map(y, n, b2dp2)
        except (OverflowError, ValueError):
            raise DivergenceError("fixed-point iterate overflowed") from None
        if not 0.0 <= y < 1.0:
            raise DivergenceError(f"fixed-point iterate left [0,1): y = {y}")
    x = math.sqrt(n * y / (1.0 - y))
    if p < 0.5:
        x = -x
    return _result(n, p, x, Method.FixedPoint)


def fixed_point_two_step(n: float, p: float) -> float:
    """Closed form of the second h-iterate; independent check path.

    x = 120 sqrt(n Z (1 - Z/4)^{-n} / (Z^4 A4 + Z^3 A3 + Z^2 A2 + Z A1 + 57600)),
    Z = (2 (p - 1/2) B(1/2, n/2))^2.
    """
    _validate(n, p)
    if p == 0.5:
        return 0.0
    pp = max(p, 1.0 - p)
    z = (2.0 * (pp - 0.5) * beta_fn(0.5, 0.5 * n)) ** 2
    if z >= 4.0:
        raise DivergenceError(f"Z = {z:.3f} >= 4; closed form undefined")
    w = math.exp(-n * math.log1p(-0.25 * z))
    a1 = -14400.0 * w + 9600.0 * n + 9600.0
    a2 = (880.0 * n + 2720.0) * n + 1840.0
    a3 = ((40.0 * n + 200.0) * n + 280.0) * n + 120.0
    a4 = (((n + 8.0) * n + 22.0) * n + 24.0) * n + 9.0
    den = (((a4 * z + a3) * z + a2) * z + a1) * z + 57600.0
    x = 120.0 * math.sqrt(n * z * w / den)
    return x if p > 0.5 else -x


# --- left tail ----------------------------------------------------------

def _eta_coeffs(n: float):
    e2 = (n + 1.0) / (n + 2.0)
    e3 = (n + 1.0) * ((2.0 * n + 9.0) * n + 6.0) \
        / (2.0 * (n + 2.0) ** 2 * (n + 4.0))
    e4 = (n + 1.0) * (((3.0 * n + 32.0) * n + 102.0) * n * n
                      + 106.0 * n + 36.0) \
        / (3.0 * (n + 2.0) ** 3 * (n + 4.0) * (n + 6.0))
    e5 = (n + 1.0) * ((((((24.0 * n + 542.0) * n + 4697.0) * n + 19883.0) * n
                        + 43442.0) * n + 48308.0) * n * n
                      + 26600.0 * n + 5760.0) \
        / (24.0 * (n + 2.0) ** 4 * (n + 4.0) ** 2 * (n + 6.0) * (n + 8.0))
    return 1.0, e2, e3, e4, e5


def left_tail_vars(n: float, p: float, terms: int = 4) -> TailSeriesVars:
    """delta and the series value of eta for the left-tail inversion."""
    _validate(n, p)
    if not 1 <= terms <= 5:
        raise ValueError("terms must be in 1..5")
    log_delta = (2.0 / n) * (math.log(p) + math.log(n)
                             + ln_beta_fn(0.5, 0.5 * n))
    delta = math.exp(log_delta)
    coeffs = _eta_coeffs(n)[:terms]
    s = 0.0
    for c in reversed(coeffs):
        s = s * delta + c
    return TailSeriesVars(eta=delta * s, delta=delta, log_delta=log_delta)


def inv_left_tail_series(n: float, p: float, terms: int = 4,
                         delta_max: float = _DELTA_MAX) -> QuantileResult:
    """Tail inversion: eta = sum eta_k delta^k, x = -sqrt(n/eta).

    Valid for small p; p near 1 is mirrored (x(p) = -x(1-p)).
    """
    _validate(n, p)
    if p > 0.5:
        inner = inv_left_tail_series(n, 1.0 - p, terms, delta_max)
        return _result(n, p, -inner.x, Method.RightTail)
    tv = left_tail_vars(n, p, terms)
    if tv.delta > delta_max:
        raise OutOfRegionError(
            f"delta = {tv.delta:.4f} exceeds delta_max = {delta_max}")
    x = -math.sqrt(n / tv.eta)
    return _result(n, p, x, Method.LeftTail)


# --- uniform asymptotic inversion ---------------------------------------

# small-xi0 Maclaurin series of xi_k, odd powers as (power, coefficient)
_XI_SERIES = (
    ((1, 1.0 / 4.0), (3, -1.0 / 48.0), (7, 1.0 / 5760.0),
     (11, -1.0 / 362880.0), (15, 1.0 / 19353600.0)),
    ((1, 1.0 / 32.0), (3, -5.0 / 192.0), (5, 7.0 / 2560.0), (7, 1.0 / 2560.0),
     (9, -407.0 / 5806080.0), (11, -13.0 / 1451520.0)),
    ((1, -5.0 / 128.0), (3, -11.0 / 1536.0), (5, 63.0 / 10240.0),
     (7, -823.0 / 2580480.0), (9, -5291.0 / 23224320.0)),
    ((1, -21.0 / 2048.0), (3, 37.0 / 2048.0), (5, 179.0 / 81920.0),
     (7, -22711.0 / 10321920.0)),
    ((1, 399.0 / 8192.0), (3, 219.0 / 32768.0), (5, -3679.0 / 327680.0)),
    ((1, 869.0 / 65536.0), (3, -6877.0 / 131072.0)),
)


def xi_series_term(k: int, xi0: float) -> float:
    """xi_k(xi0) from its small-xi0 series, k = 1..6 (odd in xi0)."""
    if not 1 <= k <= 6:
        raise ValueError("series terms available for k = 1..6")
    return sum(c * xi0 ** pw for pw, c in _XI_SERIES[k - 1])


def _xi_closed_terms(xi0: float):
    """xi_1..xi_3 from the closed forms evaluated at xi0."""
    gv = g(xi0)
    gp = g_prime(xi0)
    gpp = g_double_prime(xi0)
    u = xi0
    xi1 = math.log(gv) / u
    xi2 = -(2.0 * gv * u * xi1 * xi1 + 4.0 * (gv - u * gp) * xi1
            + u * gv - 4.0 * gp) / (4.0 * u * u * gv)
    xi3 = (2.0 * u * u * gv * gv * xi1 ** 3
           + (2.0 * u ** 3 * gv * gpp - 2.0 * u ** 3 * gp * gp
              - 6.0 * u * u * gv * gp + 8.0 * u * gv * gv) * xi1 * xi1
           + (12.0 * gv + u * u * gv - 16.0 * u * gp
              + 4.0 * u * u * gpp) * gv * xi1
           + u * gv * gv + 4.0 * u * gv * gpp + 2.0 * u * gp * gp
           - u * u * gv * gp - 12.0 * gv * gp) / (4.0 * u ** 4 * gv * gv)
    return xi1, xi2, xi3


def inv_uniform_asym(n: float, p: float, order: int = 5) -> QuantileResult:
    """Invert the erfc representation: xi0 from inverfc, then corrections.

    `order` counts expansion terms including xi0.  For |xi0| < 0.6 the
    Maclaurin series supply xi_1..xi_6 (order capped at 7); otherwise the
    closed forms supply xi_1..xi_3 (order capped at 4).
    """
    _validate(n, p)
    if not 1 <= order <= 7:
        raise ValueError(f"order must be in 1..7, got {order}")
    if p == 0.5:
        return _result(n, p, 0.0, Method.UniformAsym)
    xi0 = -inverfc(2.0 * p) * math.sqrt(2.0 / n)
    xi = xi0
    if abs(xi0) < _XI0_SERIES_CUTOFF:
        scale = 1.0
        for k in range(1, min(order, 7)):
            scale /= n
            xi += xi_series_term(k, xi0) * scale
    else:
        terms = _xi_closed_terms(xi0)
        scale = 1.0
        for k in range(1, min(order, 4)):
            scale /= n
            xi += terms[k - 1] * scale
    return _result(n, p, x_from_xi(n, xi), Method.UniformAsym)


# --- Newton polish and dispatcher ---------------------------------------

def _log_tail(n: float, x: float, lower: bool) -> float:
    """ln of the lower (or upper) tail at x; -inf when it underflows."""
    f = tcdf.cdf(n, x) if lower else tcdf.cdf(n, -x)
    return math.log(f) if f > 0.0 else -math.inf


def newton_polish(n: float, p: float, x0: float, max_steps: int = 3,
                  method: Method = Method.OracleFallback,
                  tol: float = _POLISH_TOL) -> QuantileResult:
    """Refine x0 toward F_n(x) = p using Newton steps on ln F.

    Works on the smaller tail (mirrored for p > 1/2), keeps a bracket, and
    bisects whenever a Newton step is unusable or would leave the bracket;
    the returned point never has a larger |F - p| than the seed.
    """
    _validate(n, p)
    if not math.isfinite(x0):
        raise ValueError(f"seed must be finite, got {x0}")
    if p > 0.5:
        inner = newton_polish(n, 1.0 - p, -x0, max_steps, method, tol)
        return QuantileResult(x=-inner.x, method=method,
                              polished=inner.polished,
                              est_rel_error=inner.est_rel_error)

    lnp = math.log(p)

    def resid(x):
        return _log_tail(n, x, lower=True) - lnp

    def tail_err(r):
        # |F - p|/p = |exp(r) - 1|
        if r == -math.inf:
            return 1.0
        if r > 700.0:
            return math.inf
        return abs(math.expm1(r))

    x = x0
    r = resid(x)
    best_x, best_err = x, tail_err(r)
    if best_err <= tol:
        return QuantileResult(x=x, method=method, polished=True,
                              est_rel_error=best_err)

    # establish a bracket [lo, hi] with resid(lo) < 0 <= resid(hi)
    lo = hi = x
    rlo = rhi = r
    w = max(1.0, 0.5 * abs(x))
    for _ in range(200):
        if rlo < 0.0 <= rhi:
            break
        if rlo >= 0.0:
            lo -= w
            rlo = resid(lo)
        if rhi < 0.0:
            hi += w
            rhi = resid(hi)
        w *= 2.0
    else:
        raise PolishFailedError("could not bracket the quantile", best_x)

    for _ in range(max_steps):
        f = tcdf.pdf(n, x)
        step_ok = f > 0.0 and math.isfinite(r)
        if step_ok:
            xn = x - r * math.exp(r + lnp) / f  # Newton on ln F
            step_ok = math.isfinite(xn) and lo < xn < hi
        if not step_ok:
            xn = 0.5 * (lo + hi)
        rn = resid(xn)
        if rn < 0.0:
            lo, rlo = xn, rn
        else:
            hi, rhi = xn, rn
        x, r = xn, rn
        err = tail_err(r)
        if err < best_err:
            best_x, best_err = x, err
        if best_err <= tol:
            break

    return QuantileResult(x=best_x, method=method, polished=True,
                          est_rel_error=best_err)


_FORCED = {
    "central": lambda n, p, order, iters: inv_central_series(n, p, q_max=math.inf),
    "fixed": lambda n, p, order, iters: inv_fixed_point(n, p, iters),
    "tail": lambda n, p, order, iters: inv_left_tail_series(n, p, delta_max=math.inf),
    "asym": lambda n, p, order, iters: inv_uniform_asym(n, p, order or 5),
}


def quantile(n: float, p: float, polish: bool = True, method: str = None,
             order: int = None, iterations: int = 2) -> QuantileResult:
    """Solve F_n(x) = p.

    Default routing (on the reduced tail pr = min(p, 1-p)): left-tail series
    when delta <= 0.3, central series when |q| <= 0.8, two fixed-point
    iterations when |q| <= 1.5, erfc-based inversion otherwise.  A Newton
    polish (on by default) drives |F(x) - p| below 1e-12 min(p, 1-p).
    """
    _validate(n, p)
    if method is not None:
        if method == "oracle":
            from . import oracle
            x = float(oracle.oracle_quantile(n, p))
            seed = _result(n, p, x, Method.OracleFallback)
        elif method in _FORCED:
            seed = _FORCED[method](n, p, order, iterations)
        else:
            raise ValueError(f"unknown method {method!r}")
    else:
        seed = _route(n, p)
    if not polish:
        return seed
    try:
        return newton_polish(n, p, seed.x, max_steps=100, method=seed.method)
    except PolishFailedError as exc:
        return _result(n, p, exc.best_x, seed.method)


def _route(n: float, p: float) -> QuantileResult:
    pr = min(p, 1.0 - p)
    log_delta = (2.0 / n) * (math.log(pr) + math.log(n)
                             + ln_beta_fn(0.5, 0.5 * n))
    if math.exp(log_delta) <= _DELTA_MAX:
        return inv_left_tail_series(n, p)
    q = central_q(n, p)
    if abs(q) <= _Q_MAX_CENTRAL:
        return inv_central_series(n, p)
    if abs(q) <= _Q_MAX_FIXED:
        try:
            return inv_fixed_point(n, p, 2)
        except OutOfRegionError:
            pass  # reroute below
    return inv_uniform_asym(n, p, 5)
