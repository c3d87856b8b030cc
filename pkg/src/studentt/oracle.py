"""Extended-precision reference implementation, used only as test ground
truth.  Two independent CDF backends (Gauss-Legendre quadrature of the
density and a Lentz continued fraction for the incomplete beta) must agree;
quantiles come from bracketed bisection plus high-precision Newton.

A frozen table of 50-digit values (data/oracle_table.json) lets the fast
test suite run without touching extended precision; `studentt selftest
--oracle` regenerates it.
"""
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import mpmath as mp

from . import experiments, tinv

TABLE_PATH = Path(__file__).parent / "data" / "oracle_table.json"

_GUARD = 15  # extra working digits beyond the requested budget


class OracleError(RuntimeError):
    """The reference computation failed to reach its accuracy target."""


@dataclass(frozen=True)
class PrecisionBudget:
    digits: int = 50

    def __post_init__(self):
        if self.digits < 30:
            raise ValueError("oracle precision budget is at least 30 digits")


def _digits(prec) -> int:
    if prec is None:
        return PrecisionBudget().digits
    if isinstance(prec, PrecisionBudget):
        return prec.digits
    return PrecisionBudget(int(prec)).digits


def _lower_tail_quad(n, x, digits):
    """Lower-tail integral after u^2 = ln(1+t^2/n) and s^2 = n(u^2-xi^2)/2.

    The second substitution flattens the Laplace boundary layer at u = xi,
    so degree-adaptive Gauss-Legendre converges for every (n, x <= 0); the
    truncated tail is bounded by exp(-smax^2) ~ 10^-(digits+20) relative.
    """
    xi2 = mp.log1p(x * x / n)
    smax = mp.sqrt(mp.log(mp.mpf(10)) * (digits + 20))

    def integrand(s):
        u2 = xi2 + 2 * s * s / n
        u = mp.sqrt(u2)
        gu = mp.sqrt(u2 / (-mp.expm1(-u2)))
        return mp.exp(-s * s) * (2 * s / (n * u)) * gu

    val, err = mp.quad(integrand, [0, smax / 8, smax],
                       method="gauss-legendre", error=True)
    if not err <= mp.mpf(10) ** (-(digits + 3)) * abs(val):
        raise OracleError(
            f"quadrature failed to converge at n={n}, x={x}: error {err}")
    return mp.exp(-n * xi2 / 2) / mp.beta(mp.mpf(1) / 2, n / 2) * val


def _betainc_cf(a, b, x, digits):
    """Regularized I_x(a, b) by modified Lentz continued fraction."""
    if x == 0:
        return mp.mpf(0)
    if x == 1:
        return mp.mpf(1)
    if x > (a + 1) / (a + b + 2):
        return 1 - _betainc_cf(b, a, 1 - x, digits)
    lpre = (mp.loggamma(a + b) - mp.loggamma(a) - mp.loggamma(b)
            + a * mp.log(x) + b * mp.log1p(-x))
    tiny = mp.mpf(10) ** (-2 * (digits + 40))
    eps = mp.mpf(10) ** (-(digits + 10))
    qab, qap, qam = a + b, a + 1, a - 1
    c = mp.mpf(1)
    d = 1 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1 / d
    h = d
    for m in range(1, 100_000):
        m2 = 2 * m
        for aa in (m * (b - m) * x / ((qam + m2) * (a + m2)),
                   -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))):
            d = 1 + aa * d
            if abs(d) < tiny:
                d = tiny
            c = 1 + aa / c
            if abs(c) < tiny:
                c = tiny
            d = 1 / d
            delta = d * c
            h *= delta
        if abs(delta - 1) < eps:
            return mp.exp(lpre) * h / a
    raise OracleError(f"continued fraction stalled at a={a}, b={b}, x={x}")


def _lower_tail_cf(n, x, digits):
    return _betainc_cf(n / 2, mp.mpf(1) / 2, n / (n + x * x), digits) / 2


def oracle_cdf(n: float, x: float, prec=None, backend: str = "contfrac"):
    """F_n(x) to (digits - 5) significant figures; returns an mpf.

    backend: 'contfrac' (default), 'quadrature', or 'both' (computes both,
    raises OracleError if they disagree beyond 10^-(digits-5)).
    """
    digits = _digits(prec)
    if not n > 0:
        raise ValueError(f"degrees of freedom must be positive, got {n}")
    with mp.workdps(digits + _GUARD):
        n_, x_ = mp.mpf(n), mp.mpf(x)
        if x_ == 0:
            return +mp.mpf(1) / 2
        if x_ > 0:
            return +(1 - oracle_cdf(n, -x, digits, backend))
        if backend == "contfrac":
            return +_lower_tail_cf(n_, x_, digits)
        if backend == "quadrature":
            return +_lower_tail_quad(n_, x_, digits)
        if backend == "both":
            a = _lower_tail_cf(n_, x_, digits)
            b = _lower_tail_quad(n_, x_, digits)
            if not abs(a - b) <= mp.mpf(10) ** (-(digits - 5)) * abs(a):
                raise OracleError(
                    f"oracle backends disagree at n={n}, x={x}: {a} vs {b}")
            return +a
        raise ValueError(f"unknown backend {backend!r}")


def oracle_pdf(n: float, x: float, prec=None):
    """Density f_n(x) at extended precision."""
    digits = _digits(prec)
    with mp.workdps(digits + _GUARD):
        n_, x_ = mp.mpf(n), mp.mpf(x)
        return +(mp.exp(-(n_ + 1) / 2 * mp.log1p(x_ * x_ / n_))
                 / (mp.sqrt(n_) * mp.beta(mp.mpf(1) / 2, n_ / 2)))


def oracle_quantile(n: float, p: float, prec=None):
    """x with F_n(x) = p to (digits - 5) significant figures.

    Seeded by the double-precision inverter, bracketed, bisected to ten
    digits, then finished with extended-precision Newton on ln F.
    """
    digits = _digits(prec)
    if not 0 < p < 1:
        raise ValueError(f"probability must lie in (0,1), got {p}")
    if p == 0.5:
        return mp.mpf(0)
    if p > 0.5:
        return -oracle_quantile(n, 1.0 - p, prec)  # 1-p exact for p >= 1/2
    seed = tinv.quantile(n, p, polish=True).x
    with mp.workdps(digits + _GUARD):
        n_, p_ = mp.mpf(n), mp.mpf(p)

        def F(x):
            if x <= 0:
                return _lower_tail_cf(n_, x, digits)
            return 1 - _lower_tail_cf(n_, -x, digits)

        x0 = mp.mpf(seed)
        w = max(abs(x0) * mp.mpf("1e-9"), mp.mpf("1e-13"))
        lo, hi = x0 - w, x0 + w
        for _ in range(200):
            if F(lo) <= p_:
                break
            lo -= w
            w *= 2
        else:
            raise OracleError(f"cannot bracket quantile for n={n}, p={p}")
        for _ in range(200):
            if F(hi) >= p_:
                break
            hi += w
            w *= 2
        else:
            raise OracleError(f"cannot bracket quantile for n={n}, p={p}")
        # bisection to ~10 correct digits
        for _ in range(80):
            mid = (lo + hi) / 2
            if abs(hi - lo) <= mp.mpf("1e-10") * max(abs(mid), mp.mpf("1e-300")):
                break
            if F(mid) < p_:
                lo = mid
            else:
                hi = mid
        x = (lo + hi) / 2
        # Newton on ln F
        lnp = mp.log(p_)
        for _ in range(digits):
            Fx = F(x)
            f = mp.exp(-(n_ + 1) / 2 * mp.log1p(x * x / n_)) \
                / (mp.sqrt(n_) * mp.beta(mp.mpf(1) / 2, n_ / 2))
            step = (mp.log(Fx) - lnp) * Fx / f
            x = x - step
            if abs(step) <= (abs(x) + mp.mpf("1e-300")) \
                    * mp.mpf(10) ** (-(digits + 5)):
                break
        Fx = F(x)
        if not abs(Fx - p_) <= p_ * mp.mpf(10) ** (-(digits - 5)):
            raise OracleError(
                f"quantile refinement missed target at n={n}, p={p}")
        return +x


def oracle_g_series(order: int = 12):
    """Exact Maclaurin coefficients a_0..a_order of g(u) as Fractions.

    g(u) = sqrt(h(u^2)) with h(w) = w/(1 - exp(-w)); the inverse and square
    root of the series are taken in exact rational arithmetic, so the odd
    coefficients vanish identically.
    """
    if not 0 <= order <= 20:
        raise ValueError("order must be in 0..20")
    import math as _math
    m_top = order // 2 + 1
    # (1 - exp(-w))/w = sum_k (-1)^k w^k/(k+1)!
    q = [Fraction((-1) ** k, _math.factorial(k + 1)) for k in range(m_top + 1)]
    h = [Fraction(1)]
    for m in range(1, m_top + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            acc += q[j] * h[m - j]
        h.append(-acc)
    s = [Fraction(1)]
    for m in range(1, m_top + 1):
        acc = h[m]
        for j in range(1, m):
            acc -= s[j] * s[m - j]
        s.append(acc / 2)
    out = []
    for k in range(order + 1):
        out.append(s[k // 2] if k % 2 == 0 else Fraction(0))
    return out


# --- frozen table ---------------------------------------------------------

def _entry_value(kind, n, arg, digits):
    if kind == "cdf":
        v = oracle_cdf(n, arg, digits, backend="contfrac")
    elif kind == "quantile":
        v = oracle_quantile(n, arg, digits)
    else:
        raise ValueError(f"unknown table kind {kind!r}")
    with mp.workdps(digits + _GUARD):
        return mp.nstr(v, digits, strip_zeros=False)


def regenerate_frozen_table(digits: int = 50, path: Path = None) -> Path:
    """Recompute every frozen oracle value and write the JSON table."""
    PrecisionBudget(digits)
    path = Path(path) if path is not None else TABLE_PATH
    entries = []
    for kind, n, arg in experiments.frozen_entries():
        entries.append({
            "kind": kind,
            "n": repr(float(n)),
            "arg": repr(float(arg)),
            "value": _entry_value(kind, float(n), float(arg), digits),
        })
    payload = {"digits": digits, "entries": entries}
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")
    return path


def load_frozen_table(path: Path = None) -> dict:
    """Map (kind, repr(n), repr(arg)) -> 50-digit value string."""
    path = Path(path) if path is not None else TABLE_PATH
    with open(path) as fh:
        payload = json.load(fh)
    return {(e["kind"], e["n"], e["arg"]): e["value"]
            for e in payload["entries"]}


def frozen_value(kind: str, n: float, arg: float, table: dict = None):
    """Frozen oracle value as an mpf at 50 digits."""
    table = table if table is not None else load_frozen_table()
    key = (kind, repr(float(n)), repr(float(arg)))
    with mp.workdps(60):
        return mp.mpf(table[key])
