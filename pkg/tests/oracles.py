"""Reference values computed independently of the library code paths."""

import math
import warnings

import mpmath
from scipy import integrate

mpmath.mp.dps = 40


def digamma_partial_sums(x: float, n: int = 200000) -> float:
    """Digamma from -gamma - 1/x + sum x / (k (k+x)), with an integral tail bound.

    The tail sum_{k>n} x/(k(k+x)) is squeezed between the integrals from n+1
    and n; their midpoint is used.
    """
    head = math.fsum(x / (k * (k + x)) for k in range(1, n + 1))
    upper = math.log1p(x / n)
    lower = math.log1p(x / (n + 1))
    return -0.5772156649015329 - 1.0 / x + head + 0.5 * (upper + lower)


def zeta_direct(m: int, n: int = 100000) -> float:
    head = math.fsum(k ** -m for k in range(n, 0, -1))
    # tail between the integrals from n+1 and from n
    upper = n ** (1 - m) / (m - 1)
    lower = (n + 1) ** (1 - m) / (m - 1)
    return head + 0.5 * (upper + lower)


def agm_legendre_k(r: float) -> float:
    a, b = mpmath.mpf(1), mpmath.sqrt(1 - mpmath.mpf(r) ** 2)
    return float(mpmath.pi / (2 * mpmath.agm(a, b)))


def legendre_e_quad(r: float) -> float:
    with warnings.catch_warnings():
        # quad flags round-off once it reaches machine precision
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, _ = integrate.quad(
            lambda t: math.sqrt(1.0 - r * r * math.sin(t) ** 2), 0.0, math.pi / 2, epsabs=1e-15, epsrel=1e-15
        )
    return val


def hyp2f1_brute(a: float, b: float, c: float, x: float, terms: int = 100000) -> float:
    """Plain forward summation of the Gauss series in exact-ish mpmath arithmetic."""
    a, b, c, x = map(mpmath.mpf, (a, b, c, x))
    total, term = mpmath.mpf(1), mpmath.mpf(1)
    for n in range(terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x
        total += term
        if abs(term) < mpmath.mpf(10) ** -30:
            break
    return float(total)


def _dps_for(rp2) -> int:
    # enough digits that 1 - rp2 is represented exactly
    return 40 + (int(-math.log10(rp2)) if rp2 > 0 else 0)


def ref_k(a, rp2):
    with mpmath.workdps(_dps_for(rp2)):
        return float(mpmath.pi / 2 * mpmath.hyp2f1(a, 1 - mpmath.mpf(a), 1, 1 - mpmath.mpf(rp2)))


def ref_e(a, rp2):
    with mpmath.workdps(_dps_for(rp2)):
        a = mpmath.mpf(a)
        return float(mpmath.pi / 2 * mpmath.hyp2f1(a - 1, 1 - a, 1, 1 - mpmath.mpf(rp2)))


def ref_r(x):
    x = mpmath.mpf(x)
    return -2 * mpmath.euler - mpmath.digamma(x) - mpmath.digamma(1 - x)


def _mp_parts(a, rp2):
    a = mpmath.mpf(a)
    rp2 = mpmath.mpf(rp2)
    r2 = 1 - rp2
    s = mpmath.sin(mpmath.pi * a)
    K = mpmath.pi / 2 * mpmath.hyp2f1(a, 1 - a, 1, r2)
    E = mpmath.pi / 2 * mpmath.hyp2f1(a - 1, 1 - a, 1, r2)
    R = ref_r(a)
    L = R / 2 - mpmath.log(rp2) / 2
    return a, rp2, r2, s, K, E, L


def ref_h(a, lam, rp2):
    with mpmath.workdps(60 + _dps_for(rp2)):
        a, rp2, r2, s, K, E, L = _mp_parts(a, rp2)
        return float(s * (1 + lam * rp2) * L - K)


def ref_f(a, rp2):
    with mpmath.workdps(60 + _dps_for(rp2)):
        a, rp2, r2, s, K, E, L = _mp_parts(a, rp2)
        num = r2**2 * s - 2 * a * (1 - a) * r2 * rp2 * K + 2 * (1 - a) * (rp2 - r2) * (E - rp2 * K)
        return float(num / (rp2 * r2**2))


def ref_g(a, lam, rp2):
    with mpmath.workdps(60 + _dps_for(rp2)):
        a, rp2, r2, s, K, E, L = _mp_parts(a, rp2)
        return float(mpmath.mpf(1) / 2 - L + (r2 * s - 2 * (1 - a) * (E - rp2 * K)) / (2 * lam * r2 * rp2 * s))
