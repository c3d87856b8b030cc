"""Scalar special functions underpinning the t-distribution routines.

Everything here is plain binary64 arithmetic.  Log-gamma and erfc delegate
to the C library; the inverse complementary error function, the Gauss
hypergeometric series and the regularized incomplete beta function are
implemented locally.  All functions are pure.
"""
import math

_SQRT_PI = math.sqrt(math.pi)
_LN_SQRT_PI = 0.5 * math.log(math.pi)

# relative series cutoff: one extra guard digit below binary64 resolution
_SERIES_EPS = 1e-17


class ConvergenceError(RuntimeError):
    """An iterative evaluation failed to converge within its budget."""


def ln_gamma(z: float) -> float:
    """log Gamma(z) for z > 0."""
    if not z > 0.0:
        raise ValueError(f"ln_gamma requires z > 0, got {z}")
    return math.lgamma(z)


# Stirling tail sum(B_2k/(2k(2k-1) z^(2k-1))), usable for z >= 16
_STIRLING = (1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0,
             1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,
             -3617.0 / 122400.0)


def _stirling_tail(z: float) -> float:
    w = 1.0 / (z * z)
    s = 0.0
    for c in reversed(_STIRLING):
        s = s * w + c
    return s / z


def ln_beta_fn(p: float, q: float) -> float:
    """log B(p, q) for p, q > 0; safe where B itself would under/overflow.

    For large max(p, q) the lgamma difference is rearranged through the
    Stirling expansion so the leading terms cancel analytically instead of
    numerically (plain lgamma arithmetic drifts to ~1e-10 by q ~ 1e6).
    """
    if not (p > 0.0 and q > 0.0):
        raise ValueError(f"beta function requires p, q > 0, got ({p}, {q})")
    if p > q:
        p, q = q, p
    if q < 16.0:
        return math.lgamma(p) + math.lgamma(q) - math.lgamma(p + q)
    # lgamma(q) - lgamma(p+q), Stirling form with exact cancellations
    diff = (-(q - 0.5) * math.log1p(p / q) - p * math.log(p + q) + p
            + _stirling_tail(q) - _stirling_tail(p + q))
    return math.lgamma(p) + diff


def beta_fn(p: float, q: float) -> float:
    """B(p, q) = Gamma(p)Gamma(q)/Gamma(p+q) for p, q > 0."""
    return math.exp(ln_beta_fn(p, q))


def erfc(z: float) -> float:
    """Complementary error function."""
    return math.erfc(z)


def erfcx(z: float) -> float:
    """Scaled complement exp(z^2) * erfc(z) for z >= 0, no overflow."""
    if z < 25.0:
        return math.erfc(z) * math.exp(z * z)
    # asymptotic tail: erfcx(z) ~ (1/(z sqrt(pi))) sum (-1)^k (2k-1)!!/(2z^2)^k
    w = 1.0 / (2.0 * z * z)
    term = 1.0
    s = 1.0
    for k in range(1, 12):
        term *= -(2 * k - 1) * w
        s += term
        if abs(term) < 1e-18:
            break
    return s / (z * _SQRT_PI)


def _norm_ppf_estimate(p: float) -> float:
    """Rational approximation to the standard normal quantile (|err| ~ 1e-9)."""

    def tail(z):
        return ((((-7.784894002430293e-3 * z - 3.223964580411365e-1) * z
                  - 2.400758277161838) * z - 2.549732539343734) * z
                + 4.374664141464968) * z + 2.938163982698783, \
               ((((7.784695709041462e-3 * z + 3.224671290700398e-1) * z
                  + 2.445134137142996) * z + 3.754408661907416) * z + 1.0)

    if p < 0.02425:
        z = math.sqrt(-2.0 * math.log(p))
        num, den = tail(z)
        return num / den
    if p > 0.97575:
        z = math.sqrt(-2.0 * math.log1p(-p))
        num, den = tail(z)
        return -num / den
    r = p - 0.5
    s = r * r
    num = ((((( -3.969683028665376e1 * s + 2.209460984245205e2) * s
              - 2.759285104469687e2) * s + 1.383577518672690e2) * s
            - 3.066479806614716e1) * s + 2.506628277459239) * r
    den = (((((-5.447609879822406e1 * s + 1.615858368580409e2) * s
              - 1.556989798598866e2) * s + 6.680131188771972e1) * s
            - 1.328068155288572e1) * s + 1.0)
    return num / den


def inverfc(y: float) -> float:
    """Inverse of erfc on (0, 2): returns z with erfc(z) = y.

    Seed from the normal-quantile approximation, then Newton in log space,
    which stays stable down to the smallest positive doubles.
    """
    if not 0.0 < y < 2.0:
        raise ValueError(f"inverfc requires 0 < y < 2, got {y}")
    if y == 1.0:
        return 0.0
    if y > 1.0:
        return -inverfc(2.0 - y)
    # erfc(z) = y  <=>  z = -Phi^{-1}(y/2)/sqrt(2)
    z = -_norm_ppf_estimate(0.5 * y) / math.sqrt(2.0)
    lny = math.log(y)
    for _ in range(4):
        # d(ln erfc)/dz = -(2/sqrt(pi)) / erfcx(z)
        ex = erfcx(z)
        lnerfc = math.log(ex) - z * z
        step = (lnerfc - lny) * ex * _SQRT_PI / 2.0
        z += step
        if abs(step) <= 1e-16 * max(abs(z), 1.0):
            break
    return z


def gauss_2f1(a: float, b: float, c: float, z: float,
              max_terms: int = 100_000) -> float:
    """Gauss hypergeometric 2F1(a, b; c; z) by its power series, |z| < 1.

    Terms are accumulated until one falls below 1e-17 times the partial sum.
    """
    if c <= 0.0 and c == math.floor(c):
        raise ValueError(f"2F1 undefined for nonpositive integer c = {c}")
    if abs(z) >= 1.0:
        raise ValueError(f"series for 2F1 requires |z| < 1, got z = {z}")
    if z == 0.0:
        return 1.0
    s = 1.0
    term = 1.0
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        s += term
        if not math.isfinite(s):
            raise ConvergenceError(
                f"2F1 series overflowed at term {k} (a={a}, b={b}, z={z})")
        if abs(term) < _SERIES_EPS * abs(s):
            return s
    raise ConvergenceError(
        f"2F1 series did not converge in {max_terms} terms (z={z})")


def _ib_log_prefactor(x: float, p: float, q: float) -> float:
    return p * math.log(x) + q * math.log1p(-x) - ln_beta_fn(p, q)


def _ib_series(x: float, p: float, q: float) -> float:
    """I_x(p,q) via x^p(1-x)^q/(p B) * 2F1(p+q, 1; p+1; x); good for small x."""
    pre = math.exp(_ib_log_prefactor(x, p, q)) / p
    if pre == 0.0:
        return 0.0
    s = 1.0
    comp = 0.0  # Kahan compensation: the sum can run to thousands of terms
    term = 1.0
    for k in range(500_000):
        term *= (p + q + k) * x / (p + 1.0 + k)
        y = term - comp
        t = s + y
        comp = (t - s) - y
        s = t
        if term < _SERIES_EPS * s:
            return pre * s
    raise ConvergenceError(f"incomplete beta series stalled at x={x}, p={p}, q={q}")


def _ib_contfrac(x: float, p: float, q: float) -> float:
    """I_x(p,q) by modified Lentz continued fraction; good for x below the mean."""
    pre = math.exp(_ib_log_prefactor(x, p, q)) / p
    tiny = 1e-300
    qab, qap, qam = p + q, p + 1.0, p - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, 2000):
        m2 = 2 * m
        aa = m * (q - m) * x / ((qam + m2) * (p + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(p + m) * (qab + m) * x / ((p + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return pre * h
    raise ConvergenceError(f"incomplete beta CF stalled at x={x}, p={p}, q={q}")


def inc_beta(x: float, p: float, q: float) -> float:
    """Regularized incomplete beta ratio I_x(p, q), 0 <= x <= 1.

    Below the mean p/(p+q) the direct power series is used; above it the
    complement I_x = 1 - I_{1-x}(q, p) is evaluated by continued fraction,
    so the quantity actually summed is always the well-conditioned tail.
    """
    if not (p > 0.0 and q > 0.0):
        raise ValueError(f"inc_beta requires p, q > 0, got ({p}, {q})")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"inc_beta requires 0 <= x <= 1, got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    if x <= p / (p + q):
        return _ib_series(x, p, q)
    return 1.0 - _ib_contfrac(1.0 - x, q, p)
