"""Two-sided logarithmic envelope for K_a and the functions behind its sharpness.

With s = sin(pi a) and L(r) = R(a)/2 - log r',

    1 + alpha0 r'^2 < K_a(r) / (s L(r)) < 1 + beta0 r'^2,

where alpha0 = pi / (R(a) s) - 1 and beta0 = a (1-a), and neither constant
can be improved.

H_lambda(r) = s (1 + lambda r'^2) L(r) - K_a(r) is evaluated in three
regimes. For small r the constant term is rewritten as
(s R / 2)(lambda - alpha0), which vanishes exactly at lambda = alpha0. Near
r = 1 the leading s L term of K_a is cancelled analytically. This keeps the
envelope margins resolvable where they tend to zero.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Literal

from .elliptic import (
    HALF_PI,
    ModulusPoint,
    as_point,
    em_combo,
    em_combo_scaled,
    ellk_gen,
)
from .errors import DomainError, WitnessNotFound
from .ramanujan import r_def
from .special_core import (
    DEFAULT_CONFIG,
    CompensatedSum,
    ConvergenceError,
    EvalConfig,
    Param,
    as_param,
    e_near_one_sum,
    k_near_one_remainder,
)

Side = Literal["lower", "upper"]

# below this r^2 the small-r series forms are used
SMALL_R2 = 0.25

SEARCH_STEPS = 40
# r'^2 shrinks by 2^-4 per upper-side refinement: violations of
# lambda = beta0 - eps appear only once log(1/r') ~ (1 - 2 beta0) / (2 eps)
UPPER_STEP_BITS = 4


@dataclass(frozen=True)
class SharpConstants:
    alpha0: float
    beta0: float
    lambda1: float
    lambda2: float


@dataclass(frozen=True)
class EnvelopeReport:
    a: float
    r: float
    lower: float
    value: float
    upper: float
    lower_margin: float
    upper_margin: float

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class ViolationWitness:
    a: float
    lam: float
    side: Side
    r: float
    rp2: float
    gap: float

    def as_dict(self) -> dict:
        return asdict(self)


def sharp_constants(a: float | Param) -> SharpConstants:
    a = as_param(a)
    s = math.sin(math.pi * a)
    R = r_def(a)
    q = a * (1.0 - a)
    return SharpConstants(
        alpha0=math.pi / (R * s) - 1.0,
        beta0=q,
        lambda1=(s - q * math.pi) / (s * (R - 1.0)),
        lambda2=1.0 - math.pi * q / s - math.pi * q * q / (2.0 * s),
    )


def log_term(a: float, p: ModulusPoint) -> float:
    """log(e^{R(a)/2} / r') = R(a)/2 - log r'."""
    if p.rp2 == 0.0:
        raise DomainError("log(e^{R(a)/2} / r') is infinite at r = 1")
    return 0.5 * r_def(a) - p.log_rp()


def ratio_rho(
    a: float | Param, p: float | ModulusPoint, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    a, p = as_param(a), as_point(p)
    return ellk_gen(a, p, cfg) / (math.sin(math.pi * a) * log_term(a, p))


def _k_minus_half_pi(a: float, x: float, cfg: EvalConfig) -> float:
    """K_a(r) - pi/2 from the series, for small r^2 = x."""
    term = 1.0
    acc = CompensatedSum()
    tol = cfg.rel_tol * (1.0 - x)
    for n in range(cfg.max_terms):
        term *= (a + n) * (1.0 - a + n) / ((n + 1.0) ** 2) * x
        acc.add(term)
        if abs(term) <= tol * abs(acc.total):
            return HALF_PI * acc.value
    raise ConvergenceError(f"K_a series did not converge at r^2 = {x}")


def h_lambda(
    a: float | Param,
    lam: float,
    p: float | ModulusPoint,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> float:
    """H_lambda(r) = s (1 + lambda r'^2) log(e^{R(a)/2}/r') - K_a(r).

    H > 0 means the ratio K_a / (s L) lies below 1 + lambda r'^2.
    """
    a, p = as_param(a), as_point(p)
    if not lam > 0.0:
        raise DomainError(f"lambda must be positive, got {lam!r}")
    s = math.sin(math.pi * a)
    if p.rp2 < cfg.near_one_cut:
        return s * p.rp2 * k_near_one_remainder(a, p.rp2, lam, cfg)
    x = p.r2
    if x <= SMALL_R2:
        R = r_def(a)
        alpha0 = math.pi / (R * s) - 1.0
        ell = -p.log_rp()
        acc = CompensatedSum(0.5 * s * R * (lam - alpha0))
        acc.add(s * (1.0 + lam) * ell)
        acc.add(-s * lam * x * (0.5 * R + ell))
        acc.add(-_k_minus_half_pi(a, x, cfg))
        return acc.value
    return s * (1.0 + lam * p.rp2) * log_term(a, p) - ellk_gen(a, p, cfg)


def envelope(
    a: float | Param,
    p: float | ModulusPoint,
    cfg: EvalConfig = DEFAULT_CONFIG,
    constants: SharpConstants | None = None,
) -> EnvelopeReport:
    """Lower bound, K_a and upper bound at one point, with margins.

    ``constants`` overrides the sharp constants (used for fault injection).
    """
    a, p = as_param(a), as_point(p)
    c = sharp_constants(a) if constants is None else constants
    s = math.sin(math.pi * a)
    L = log_term(a, p)
    return EnvelopeReport(
        a=a,
        r=p.r,
        lower=s * (1.0 + c.alpha0 * p.rp2) * L,
        value=ellk_gen(a, p, cfg),
        upper=s * (1.0 + c.beta0 * p.rp2) * L,
        lower_margin=-h_lambda(a, c.alpha0, p, cfg),
        upper_margin=h_lambda(a, c.beta0, p, cfg),
    )


def _f_numerator_scaled(a: float, x: float, cfg: EvalConfig) -> float:
    """Numerator of F divided by r^4, as a power series in x = r^2.

    With k_n = (a)_n (1-a)_n / (n!)^2 and m_n = a k_n / (n+1) the x^1
    coefficient vanishes identically, and the x^j coefficient (j >= 2) is
    -2a(1-a)(k_{j-1} - k_{j-2}) + 2(1-a)(m_{j-1} - 2 m_{j-2}).
    """
    s = math.sin(math.pi * a)
    q = a * (1.0 - a)
    k_prev, k_cur = 1.0, q  # k_{j-2}, k_{j-1} at j = 2
    power = 1.0
    acc = CompensatedSum()
    tol = cfg.rel_tol * (1.0 - x)
    for j in range(2, cfg.max_terms):
        m_prev = a * k_prev / (j - 1.0)
        m_cur = a * k_cur / j
        term = (-2.0 * q * (k_cur - k_prev) + 2.0 * (1.0 - a) * (m_cur - 2.0 * m_prev)) * power
        acc.add(term)
        if abs(term) <= tol * abs(acc.total):
            return s + HALF_PI * acc.value
        k_prev, k_cur = k_cur, k_cur * (a + j - 1.0) * (1.0 - a + j - 1.0) / (j * j)
        power *= x
    raise ConvergenceError(f"F numerator series did not converge at r^2 = {x}")


def _near_one_bracket(a: float, p: ModulusPoint, K: float, cfg: EvalConfig) -> float:
    """[r^2 s - 2(1-a)(E_a - r'^2 K_a)] / r'^2 near r = 1, free of the 1/r'^2."""
    s = math.sin(math.pi * a)
    S = e_near_one_sum(a, p.rp2, cfg)
    return -s + (1.0 - a) ** 2 * s * S + 2.0 * (1.0 - a) * K


def f_lemma33(
    a: float | Param, p: float | ModulusPoint, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """F(r) = [r^4 s - 2a(1-a) r^2 r'^2 K + 2(1-a)(r'^2 - r^2)(E - r'^2 K)] / (r'^2 r^4).

    Increases from s - pi a(1-a) - (pi/2) a^2 (1-a)^2 to a(1-a) s.
    """
    a, p = as_param(a), as_point(p)
    if p.rp2 == 0.0:
        raise DomainError("F(r) is defined only for r < 1")
    x = p.r2
    if x <= SMALL_R2:
        return _f_numerator_scaled(a, x, cfg) / p.rp2
    s = math.sin(math.pi * a)
    K = ellk_gen(a, p, cfg)
    if p.rp2 < cfg.near_one_cut:
        # numerator = s y^2 - y [2a(1-a) x K + (y - x) B]; the y^2 cancels
        B = _near_one_bracket(a, p, K, cfg) + s
        y = p.rp2
        return (s * y - 2.0 * a * (1.0 - a) * x * K - (y - x) * B) / (x * x)
    M = em_combo(a, p, cfg)
    num = (
        x * x * s
        - 2.0 * a * (1.0 - a) * x * p.rp2 * K
        + 2.0 * (1.0 - a) * (p.rp2 - x) * M
    )
    return num / (p.rp2 * x * x)


def g_lambda(
    a: float | Param,
    lam: float,
    p: float | ModulusPoint,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> float:
    """G_lambda(r) = 1/2 - L + [r^2 s - 2(1-a)(E - r'^2 K)] / (2 lambda r^2 r'^2 s)."""
    a, p = as_param(a), as_point(p)
    if not lam > 0.0:
        raise DomainError(f"lambda must be positive, got {lam!r}")
    if p.rp2 == 0.0:
        raise DomainError("G_lambda(r) is defined only for r < 1")
    s = math.sin(math.pi * a)
    if p.rp2 < cfg.near_one_cut:
        bracket = _near_one_bracket(a, p, ellk_gen(a, p, cfg), cfg) / p.r2
        return 0.5 - log_term(a, p) + bracket / (2.0 * lam * s)
    bracket = s - 2.0 * (1.0 - a) * em_combo_scaled(a, p, cfg)
    return 0.5 - log_term(a, p) + bracket / (2.0 * lam * p.rp2 * s)


def envelope_scan(
    a_grid: Iterable[float | Param],
    r_grid: Iterable[float | ModulusPoint],
    cfg: EvalConfig = DEFAULT_CONFIG,
    constants_fn: Callable[[float], SharpConstants] = sharp_constants,
) -> list[EnvelopeReport]:
    """Envelope reports over a grid, ordered a-major then r."""
    a_grid = [as_param(a) for a in a_grid]
    points = [as_point(r) for r in r_grid]
    if not a_grid or not points:
        raise DomainError("envelope_scan needs non-empty a and r grids")
    reports = []
    for a in a_grid:
        c = constants_fn(a)
        for p in points:
            try:
                reports.append(envelope(a, p, cfg, constants=c))
            except (ArithmeticError, ValueError) as exc:
                raise type(exc)(f"{exc} (at a={a!r}, r={p.r!r}, r'^2={p.rp2!r})") from exc
    return reports


def search_points(side: Side) -> list[ModulusPoint]:
    """Geometric grid approaching r = 0 (lower) or r = 1 (upper)."""
    if side == "lower":
        return [ModulusPoint.from_r(2.0 ** -k) for k in range(1, SEARCH_STEPS + 1)]
    if side == "upper":
        return [
            ModulusPoint.from_rp2(2.0 ** (-UPPER_STEP_BITS * k))
            for k in range(1, SEARCH_STEPS + 1)
        ]
    raise DomainError(f"side must be 'lower' or 'upper', got {side!r}")


def violation_gap(
    a: float, lam: float, side: Side, p: ModulusPoint, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """Signed amount by which 1 + lam r'^2 fails as a bound on the ratio.

    lower: (1 + lam r'^2) - rho; upper: rho - (1 + lam r'^2). Positive means
    violated.
    """
    h = h_lambda(a, lam, p, cfg) / (math.sin(math.pi * a) * log_term(a, p))
    return h if side == "lower" else -h


def sharpness_scan(
    a: float | Param,
    lam: float,
    side: Side,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> ViolationWitness:
    """First grid point where the inequality with constant ``lam`` fails.

    side="lower" needs lam > alpha0(a); side="upper" needs 0 < lam < beta0(a).
    """
    a = as_param(a)
    c = sharp_constants(a)
    if side == "lower" and not lam > c.alpha0:
        raise DomainError(f"lower-side scan needs lambda > alpha0 = {c.alpha0!r}")
    if side == "upper" and not 0.0 < lam < c.beta0:
        raise DomainError(f"upper-side scan needs 0 < lambda < beta0 = {c.beta0!r}")
    for p in search_points(side):
        gap = violation_gap(a, lam, side, p, cfg)
        if gap > 0.0:
            return ViolationWitness(a=a, lam=lam, side=side, r=p.r, rp2=p.rp2, gap=gap)
    raise WitnessNotFound(
        f"no {side}-side violation for a={a!r}, lambda={lam!r} "
        f"within {SEARCH_STEPS} refinements"
    )
