"""Scalar special functions: Pochhammer symbols, digamma, zeta at integers,
and the Gauss hypergeometric series used by the elliptic integrals.

Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

EULER_GAMMA = 0.57721566490153286060651209008240243
# EULER_GAMMA - float(EULER_GAMMA)
_EULER_GAMMA_LO = -4.942915152430645e-18

# B_{2k} / (2k) for k = 1..7, asymptotic digamma series
_DIGAMMA_ASYMPTOTIC = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)
_DIGAMMA_SHIFT = 10.0

# B_{2k} / (2k)! for k = 1..5, Euler-Maclaurin tail of zeta
_EM_COEFFS = (
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
)
_ZETA_TERMS = 40


@dataclass(frozen=True)
class EvalConfig:
    """Series truncation settings shared by every evaluator."""

    rel_tol: float = 1e-15
    max_terms: int = 20000
    near_one_cut: float = 0.05

    def __post_init__(self) -> None:
        if not 0.0 < self.rel_tol < 1e-6:
            raise DomainError(f"rel_tol must lie in (0, 1e-6), got {self.rel_tol!r}")
        if self.max_terms < 64:
            raise DomainError(f"max_terms must be >= 64, got {self.max_terms!r}")
        if not 0.0 < self.near_one_cut < 1.0:
            raise DomainError(f"near_one_cut must lie in (0, 1), got {self.near_one_cut!r}")

    @classmethod
    def from_env(cls) -> "EvalConfig":
        """Defaults, overridden by ``ELLINT_REL_TOL`` / ``ELLINT_MAX_TERMS``."""
        kwargs = {}
        if "ELLINT_REL_TOL" in os.environ:
            kwargs["rel_tol"] = float(os.environ["ELLINT_REL_TOL"])
        if "ELLINT_MAX_TERMS" in os.environ:
            kwargs["max_terms"] = int(os.environ["ELLINT_MAX_TERMS"])
        return cls(**kwargs)


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class Param:
    """Generalization parameter ``a`` of the elliptic integrals, ``0 < a <= 1/2``."""

    a: float

    def __post_init__(self) -> None:
        if not (0.0 < self.a <= 0.5):
            raise DomainError(f"parameter a must lie in (0, 1/2], got {self.a!r}")

    def __float__(self) -> float:
        return self.a


def as_param(a: float | Param) -> float:
    if isinstance(a, Param):
        return a.a
    return Param(float(a)).a


class CompensatedSum:
    """Running Neumaier sum; keeps the low-order bits a plain ``+=`` drops."""

    __slots__ = ("total", "_carry")

    def __init__(self, start: float = 0.0) -> None:
        self.total = start
        self._carry = 0.0

    def add(self, term: float) -> None:
        t = self.total + term
        if abs(self.total) >= abs(term):
            self._carry += (self.total - t) + term
        else:
            self._carry += (term - t) + self.total
        self.total = t

    @property
    def value(self) -> float:
        return self.total + self._carry


def pochhammer(x: float, n: int) -> float:
    """Rising factorial x (x+1) ... (x+n-1)."""
    if n < 0:
        raise DomainError(f"pochhammer needs n >= 0, got {n!r}")
    result = 1.0
    for k in range(n):
        result *= x + k
    return result


def _digamma_into(acc: CompensatedSum, x: float, sign: float) -> None:
    """Add sign * psi(x) to ``acc`` term by term."""
    while x < _DIGAMMA_SHIFT:
        acc.add(-sign / x)
        x += 1.0
    inv2 = 1.0 / (x * x)
    poly = 0.0
    for c in reversed(_DIGAMMA_ASYMPTOTIC):
        poly = poly * inv2 + c
    acc.add(sign * math.log(x))
    acc.add(-sign * 0.5 / x)
    acc.add(-sign * poly * inv2)


def digamma(x: float) -> float:
    """Logarithmic derivative of the gamma function for ``x > 0``.

    The argument is shifted upward with psi(x) = psi(x + 1) - 1/x until it
    exceeds 10, then the asymptotic Bernoulli series is applied.
    """
    if not x > 0.0:
        raise DomainError(f"digamma needs x > 0, got {x!r}")
    acc = CompensatedSum()
    _digamma_into(acc, x, 1.0)
    return acc.value


def zeta_int(m: int) -> float:
    """Riemann zeta at an integer ``m >= 2``.

    Direct sum of the first 39 terms plus an Euler-Maclaurin tail from n = 40.
    """
    if int(m) != m or m < 2:
        raise DomainError(f"zeta_int needs an integer m >= 2, got {m!r}")
    m = int(m)
    n = float(_ZETA_TERMS)
    tail = [n ** (1 - m) / (m - 1), 0.5 * n ** (-m)]
    rising = float(m)  # m (m+1) ... (m+2k-2)
    for k, coeff in enumerate(_EM_COEFFS, start=1):
        tail.append(coeff * rising * n ** (-m - 2 * k + 1))
        rising *= (m + 2 * k - 1) * (m + 2 * k)
    head = [float(j) ** (-m) for j in range(_ZETA_TERMS - 1, 0, -1)]
    return math.fsum(tail + head)


def hyp2f1_series(
    a: float, b: float, c: float, x: float, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """Partial sum of the Gauss series F(a, b; c; x) for ``|x| < 1``.

    Terms are updated by their ratio and summed with compensation until a
    term drops below ``rel_tol * (1 - |x|)`` of the running sum. Raises
    :class:`ConvergenceError` when ``cfg.max_terms`` is exhausted.
    """
    if not -1.0 < x < 1.0:
        raise DomainError(f"hyp2f1_series needs -1 < x < 1, got {x!r}")
    if c <= 0 and float(c).is_integer():
        raise DomainError(f"c must not be a nonpositive integer, got {c!r}")
    acc = CompensatedSum(1.0)
    term = 1.0
    # the tail behind a term is at most term / (1 - |x|) once ratios settle
    tol = cfg.rel_tol * (1.0 - abs(x))
    for n in range(cfg.max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x
        acc.add(term)
        if abs(term) <= tol * abs(acc.total):
            return acc.value
    raise ConvergenceError(
        f"F({a}, {b}; {c}; {x}) did not converge in {cfg.max_terms} terms"
    )


def _check_near_one(a: float, y: float, cfg: EvalConfig) -> None:
    if not 0.0 < a <= 0.5:
        raise DomainError(f"parameter a must lie in (0, 1/2], got {a!r}")
    if not 0.0 <= y <= cfg.near_one_cut:
        raise DomainError(
            f"1 - x = {y!r} is outside [0, near_one_cut={cfg.near_one_cut}]; "
            "use hyp2f1_series"
        )


def ramanujan_digamma(a: float) -> float:
    """-2 gamma - psi(a) - psi(1 - a); the zeroth connection coefficient.

    Both digamma expansions share one compensated sum, which keeps the
    result within about one ulp.
    """
    if not a > 0.0 or not a < 1.0:
        raise DomainError(f"ramanujan_digamma needs 0 < a < 1, got {a!r}")
    acc = CompensatedSum(-2.0 * EULER_GAMMA)
    acc.add(-2.0 * _EULER_GAMMA_LO)
    _digamma_into(acc, a, -1.0)
    _digamma_into(acc, 1.0 - a, -1.0)
    return acc.value


def _k_near_one_terms(a: float, y: float, cfg: EvalConfig):
    """Yield (k_n y^n, d_n) for the logarithmic expansion of F(a, 1-a; 1; 1-y).

    k_n = (a)_n (1-a)_n / (n!)^2 and d_n = 2 psi(n+1) - psi(a+n) - psi(1-a+n).
    """
    coeff = 1.0
    d = ramanujan_digamma(a)
    for n in range(cfg.max_terms):
        yield n, coeff, d
        coeff *= (a + n) * (1.0 - a + n) / ((n + 1.0) ** 2) * y
        d += 2.0 / (n + 1.0) - 1.0 / (a + n) - 1.0 / (1.0 - a + n)


def hyp2f1_k_near_one(
    a: float,
    x: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    *,
    one_minus_x: float | None = None,
) -> float:
    """F(a, 1-a; 1; x) for x close to 1 via the logarithmic connection formula.

    ``one_minus_x`` may be given directly so that no digits of ``1 - x`` are
    lost; it then takes precedence over ``x``.
    """
    y = 1.0 - x if one_minus_x is None else one_minus_x
    _check_near_one(a, y, cfg)
    if y == 0.0:
        raise DomainError("F(a, 1-a; 1; x) diverges at x = 1")
    log_y = math.log(y)
    acc = CompensatedSum()
    for n, coeff, d in _k_near_one_terms(a, y, cfg):
        term = coeff * (d - log_y)
        acc.add(term)
        if n > 0 and abs(term) <= cfg.rel_tol * abs(acc.total):
            return math.sin(math.pi * a) / math.pi * acc.value
    raise ConvergenceError(f"near-one expansion at 1 - x = {y} did not converge")


def k_near_one_remainder(
    a: float, y: float, lam: float, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """lam * (d_0 - log y) / 2 - (1/2) sum_{n>=1} k_n y^{n-1} (d_n - log y).

    Equals [s (1 + lam y) L - (pi/2) F(a, 1-a; 1; 1-y)] / (s y) with
    s = sin(pi a) and L = (d_0 - log y)/2, with the leading s L cancelled
    analytically so the result keeps full relative precision as y -> 0.
    """
    _check_near_one(a, y, cfg)
    if y == 0.0:
        raise DomainError("remainder undefined at y = 0")
    log_y = math.log(y)
    acc = CompensatedSum()
    terms = _k_near_one_terms(a, y, cfg)
    _, _, d0 = next(terms)
    acc.add(0.5 * lam * (d0 - log_y))
    for n, coeff, d in terms:
        term = -0.5 * (coeff / y) * (d - log_y)
        acc.add(term)
        if n > 1 and abs(term) <= cfg.rel_tol * abs(acc.total):
            return acc.value
    raise ConvergenceError(f"near-one remainder at y = {y} did not converge")


def e_near_one_sum(a: float, y: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """sum_n (a)_n (2-a)_n / (n! (n+1)!) y^n [log y + b_n], with
    b_n = psi(a+n) + psi(2-a+n) - psi(n+1) - psi(n+2).

    F(a-1, 1-a; 1; 1-y) = sin(pi a)/(pi (1-a)) - (1-a) sin(pi a)/pi * y * (this sum).
    """
    _check_near_one(a, y, cfg)
    if y == 0.0:
        raise DomainError("log-series undefined at y = 0")
    log_y = math.log(y)
    b = -ramanujan_digamma(a) + a / (1.0 - a)
    coeff = 1.0
    acc = CompensatedSum()
    for n in range(cfg.max_terms):
        term = coeff * (log_y + b)
        acc.add(term)
        if n > 0 and abs(term) <= cfg.rel_tol * abs(acc.total):
            return acc.value
        coeff *= (a + n) * (2.0 - a + n) / ((n + 1.0) * (n + 2.0)) * y
        b += 1.0 / (a + n) + 1.0 / (2.0 - a + n) - 1.0 / (n + 1.0) - 1.0 / (n + 2.0)
    raise ConvergenceError(f"near-one expansion at 1 - x = {y} did not converge")


def hyp2f1_e_near_one(
    a: float,
    x: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    *,
    one_minus_x: float | None = None,
) -> float:
    """F(a-1, 1-a; 1; x) for x close to 1 (connection formula with c-a-b = 1).

    Finite at x = 1, where it equals sin(pi a) / (pi (1-a)).
    """
    y = 1.0 - x if one_minus_x is None else one_minus_x
    _check_near_one(a, y, cfg)
    s = math.sin(math.pi * a)
    head = s / (math.pi * (1.0 - a))
    if y == 0.0:
        return head
    return head - (1.0 - a) * s / math.pi * y * e_near_one_sum(a, y, cfg)
