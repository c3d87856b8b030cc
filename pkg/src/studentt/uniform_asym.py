"""Large-n representation of the t CDF in terms of erfc.

The change of variables u^2 = ln(1 + t^2/n) turns the CDF integrand into a
Gaussian times g(u) = sqrt(u^2/(1 - exp(-u^2))), giving

    F_n(x) = erfc(-xi sqrt(n/2))/2
             - exp(-n xi^2/2)/(sqrt(2 pi n) beta_n) * sum_k C_k(xi)/n^k,

with xi^2 = ln(1 + x^2/n), sign(xi) = sign(x).  The coefficient families
C_k and the derivatives of g are frozen here as closed forms plus Maclaurin
fallbacks near zero; scripts/derive_coefficients.py re-derives and checks
every table in this module from the defining recursions.
"""
import math
from dataclasses import dataclass

from .specfun import beta_fn, erfc

_TWO_PI = 2.0 * math.pi

# Maclaurin coefficients of g(u) = 1 + u^2/4 + u^4/96 - ... (even powers)
_G_EVEN = (1.0, 1.0 / 4.0, 1.0 / 96.0, -1.0 / 384.0, -1.0 / 10240.0,
           19.0 / 368640.0, 79.0 / 61931520.0)
# g'(u): odd powers u, u^3, ...
_GP_ODD = (1.0 / 2.0, 1.0 / 24.0, -1.0 / 64.0, -1.0 / 1280.0,
           19.0 / 36864.0, 79.0 / 5160960.0)
# g''(u): even powers
_GPP_EVEN = (1.0 / 2.0, 1.0 / 8.0, -5.0 / 64.0, -7.0 / 1280.0,
             19.0 / 4096.0, 869.0 / 5160960.0)

# beta(n) ~ sum D_k / n^k
D_COEFFS = (1.0, 1.0 / 4.0, 1.0 / 32.0, -5.0 / 128.0)

# Maclaurin series of C_k(xi), odd powers xi^1 .. xi^9, for |xi| < 0.25
_C_SERIES = (
    (1.0 / 4.0, 1.0 / 96.0, -1.0 / 384.0, -1.0 / 10240.0, 19.0 / 368640.0),
    (1.0 / 32.0, -5.0 / 384.0, -7.0 / 10240.0, 19.0 / 40960.0,
     869.0 / 61931520.0),
    (-5.0 / 128.0, -7.0 / 2048.0, 133.0 / 40960.0, 869.0 / 6881280.0,
     -7865.0 / 49545216.0),
    (-21.0 / 2048.0, 133.0 / 8192.0, 869.0 / 983040.0, -7865.0 / 5505024.0,
     -334477.0 / 7927234560.0),
    (399.0 / 8192.0, 869.0 / 196608.0, -7865.0 / 786432.0,
     -334477.0 / 880803840.0, 28717403.0 / 31708938240.0),
)

_C_SERIES_CUTOFF = 0.25
_G_SERIES_CUTOFF = 0.1


def _poly_even(coeffs, u):
    w = u * u
    s = 0.0
    for c in reversed(coeffs):
        s = s * w + c
    return s


def _poly_odd(coeffs, u):
    return u * _poly_even(coeffs, u)


def g(u: float) -> float:
    """g(u) = sqrt(u^2 / (1 - exp(-u^2))) >= 1, even, g(0) = 1."""
    if abs(u) < _G_SERIES_CUTOFF:
        return _poly_even(_G_EVEN, u)
    w = u * u
    return math.sqrt(w / -math.expm1(-w))


def g_prime(u: float) -> float:
    """dg/du; closed form g (1 - g^2 + u^2)/u away from 0, series near 0."""
    if abs(u) < _G_SERIES_CUTOFF:
        return _poly_odd(_GP_ODD, u)
    gu = g(u)
    return gu * (1.0 - gu * gu + u * u) / u


def g_double_prime(u: float) -> float:
    """d^2 g/du^2 via the same algebraic reduction, series near 0."""
    if abs(u) < _G_SERIES_CUTOFF:
        return _poly_even(_GPP_EVEN, u)
    gu = g(u)
    pp = 1.0 - gu * gu + u * u
    return gu * pp * (pp - 2.0 * gu * gu - 1.0) / (u * u) + 2.0 * gu


def xi_from_x(n: float, x: float) -> float:
    """xi = sign(x) sqrt(ln(1 + x^2/n))."""
    if not n > 0.0:
        raise ValueError(f"degrees of freedom must be positive, got {n}")
    if x == 0.0:
        return 0.0
    ax = abs(x)
    if ax > 1e150:
        # x*x would overflow; ln(1 + x^2/n) = 2 ln|x| - ln n to ~1e-300
        w = 2.0 * math.log(ax) - math.log(n)
    elif ax * ax / n < 1e-30:
        # x*x may underflow; xi = x/sqrt(n) to O(x^2/n) relative
        return x / math.sqrt(n)
    else:
        w = math.log1p(x * x / n)
    return math.copysign(math.sqrt(w), x)


def x_from_xi(n: float, xi: float) -> float:
    """Inverse of xi_from_x: x = sign(xi) sqrt(n expm1(xi^2))."""
    if not n > 0.0:
        raise ValueError(f"degrees of freedom must be positive, got {n}")
    if xi == 0.0:
        return 0.0
    if abs(xi) < 1e-15:
        return xi * math.sqrt(n)
    return math.copysign(math.sqrt(n * math.expm1(xi * xi)), xi)


def coeff_C(k: int, xi: float) -> float:
    """Correction coefficient C_k(xi), k = 0..4.

    Closed forms are used for |xi| >= 0.25; below that they cancel several
    digits, so frozen Maclaurin series through xi^9 take over.
    """
    if not 0 <= k <= 4:
        raise ValueError(f"C_k is implemented for k = 0..4, got k = {k}")
    if xi == 0.0:
        return 0.0
    if abs(xi) < _C_SERIES_CUTOFF:
        return _poly_odd(_C_SERIES[k], xi)
    u = xi
    G = g(u)
    u2 = u * u
    if k == 0:
        return (G - 1.0) / u
    if k == 1:
        return (-(G ** 3) + G * u2 - u2 / 4.0 + 1.0) / u ** 3
    if k == 2:
        u4 = u2 * u2
        return (3.0 * G ** 5 - 4.0 * G ** 3 * u2 + G * u4
                - u4 / 32.0 + u2 / 4.0 - 3.0) / u ** 5
    if k == 3:
        u4 = u2 * u2
        u6 = u4 * u2
        return (-1920.0 * G ** 7 + 3456.0 * G ** 5 * u2 - 1664.0 * G ** 3 * u4
                + 128.0 * G * u6 + 5.0 * u6 + 4.0 * u4 - 96.0 * u2
                + 1920.0) / (128.0 * u ** 7)
    u4 = u2 * u2
    u6 = u4 * u2
    u8 = u4 * u4
    return (215040.0 * G ** 9 - 491520.0 * G ** 7 * u2
            + 356352.0 * G ** 5 * u4 - 81920.0 * G ** 3 * u6
            + 2048.0 * G * u8 + 21.0 * u8 - 80.0 * u6 - 192.0 * u4
            + 7680.0 * u2 - 215040.0) / (2048.0 * u ** 9)


def beta_n_exact(n: float) -> float:
    """beta(n) = sqrt(n/(2 pi)) B(1/2, n/2)."""
    if not n > 0.0:
        raise ValueError(f"degrees of freedom must be positive, got {n}")
    return math.sqrt(n / _TWO_PI) * beta_fn(0.5, 0.5 * n)


def beta_n_series(n: float) -> float:
    """Large-n expansion of beta(n) through 1/n^3."""
    if not n > 0.0:
        raise ValueError(f"degrees of freedom must be positive, got {n}")
    inv = 1.0 / n
    s = 0.0
    for d in reversed(D_COEFFS):
        s = s * inv + d
    return s


@dataclass(frozen=True)
class UniformExpansionContext:
    """Precomputed pieces of the erfc-based representation at one (n, xi)."""
    n: float
    xi: float
    c_coeffs: tuple
    beta_n: float
    d_coeffs: tuple = D_COEFFS


def make_context(n: float, xi: float, k_max: int = 4) -> UniformExpansionContext:
    if k_max < 4:
        raise ValueError("context requires at least C_0..C_4")
    cs = tuple(coeff_C(k, xi) for k in range(k_max + 1))
    return UniformExpansionContext(n=n, xi=xi, c_coeffs=cs,
                                   beta_n=beta_n_exact(n))


def cdf_uniform_asym(n: float, x: float, k_terms: int = 5) -> float:
    """F_n(x) from the erfc representation with k_terms correction terms."""
    if not n > 0.0:
        raise ValueError(f"degrees of freedom must be positive, got {n}")
    if not 1 <= k_terms <= 5:
        raise ValueError(f"k_terms must be in 1..5, got {k_terms}")
    if x == 0.0:
        return 0.5
    xi = xi_from_x(n, x)
    lead = 0.5 * erfc(-xi * math.sqrt(0.5 * n))
    # exp(-n xi^2 / 2) without forming xi^2 when it has overflowed upstream
    expo = -0.5 * n * xi * xi
    if expo < -745.0:
        return lead
    s = 0.0
    inv_n = 1.0 / n
    scale = 1.0
    for k in range(k_terms):
        s += coeff_C(k, xi) * scale
        scale *= inv_n
    corr = math.exp(expo) / (math.sqrt(_TWO_PI * n) * beta_n_exact(n)) * s
    return lead - corr
