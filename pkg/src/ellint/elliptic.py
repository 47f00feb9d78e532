"""Generalized complete elliptic integrals K_a, E_a and their derivatives.

    K_a(r) = (pi/2) F(a, 1-a; 1; r^2),   E_a(r) = (pi/2) F(a-1, 1-a; 1; r^2)

Points carry ``r'^2 = 1 - r^2`` explicitly, so the near-one expansions see
the complementary modulus at full precision even when ``r`` itself rounds
to 1.0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .special_core import (
    DEFAULT_CONFIG,
    CompensatedSum,
    ConvergenceError,
    EvalConfig,
    Param,
    as_param,
    hyp2f1_e_near_one,
    hyp2f1_k_near_one,
    hyp2f1_series,
)

HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class ModulusPoint:
    """Modulus ``r`` with its complementary square ``rp2 = 1 - r^2``."""

    r: float
    rp2: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.r <= 1.0 and 0.0 <= self.rp2 <= 1.0):
            raise DomainError(f"modulus out of range: r={self.r!r}, r'^2={self.rp2!r}")

    @classmethod
    def from_r(cls, r: float) -> "ModulusPoint":
        r = float(r)
        if not 0.0 <= r <= 1.0:
            raise DomainError(f"modulus r must lie in [0, 1], got {r!r}")
        return cls(r, (1.0 - r) * (1.0 + r))

    @classmethod
    def from_rp2(cls, rp2: float) -> "ModulusPoint":
        rp2 = float(rp2)
        if not 0.0 <= rp2 <= 1.0:
            raise DomainError(f"r'^2 must lie in [0, 1], got {rp2!r}")
        return cls(math.sqrt(1.0 - rp2), rp2)

    @property
    def r2(self) -> float:
        if self.rp2 > 0.5:
            return self.r * self.r
        return 1.0 - self.rp2

    def log_rp(self) -> float:
        """log r', accurate at both ends of the interval."""
        if self.rp2 > 0.5:
            return 0.5 * math.log1p(-self.r * self.r)
        return 0.5 * math.log(self.rp2)


def as_point(p: float | ModulusPoint) -> ModulusPoint:
    if isinstance(p, ModulusPoint):
        return p
    return ModulusPoint.from_r(p)


def _near_one(p: ModulusPoint, cfg: EvalConfig) -> bool:
    return p.rp2 < cfg.near_one_cut


def ellk_gen(
    a: float | Param, p: float | ModulusPoint, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """K_a(r); diverges as r -> 1, so ``r' = 0`` is rejected."""
    a, p = as_param(a), as_point(p)
    if p.rp2 == 0.0:
        raise DomainError("K_a(r) is infinite at r = 1")
    if _near_one(p, cfg):
        return HALF_PI * hyp2f1_k_near_one(a, p.r2, cfg, one_minus_x=p.rp2)
    return HALF_PI * hyp2f1_series(a, 1.0 - a, 1.0, p.r2, cfg)


def elle_gen(
    a: float | Param, p: float | ModulusPoint, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """E_a(r) on [0, 1]; E_a(1) = sin(pi a) / (2 (1-a))."""
    a, p = as_param(a), as_point(p)
    if _near_one(p, cfg):
        return HALF_PI * hyp2f1_e_near_one(a, p.r2, cfg, one_minus_x=p.rp2)
    return HALF_PI * hyp2f1_series(a - 1.0, 1.0 - a, 1.0, p.r2, cfg)


def em_combo_scaled(
    a: float | Param, p: float | ModulusPoint, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """(E_a - r'^2 K_a) / r^2 by its own power series in r^2.

    Tends to pi a / 2 as r -> 0 with no cancellation. Only valid away from
    r = 1 (``rp2 >= near_one_cut``).
    """
    a, p = as_param(a), as_point(p)
    x = p.r2
    # term_n = a (a)_n (1-a)_n / ((n+1)! n!) x^n
    term = a
    acc = CompensatedSum(term)
    tol = cfg.rel_tol * (1.0 - x)
    for n in range(cfg.max_terms):
        term *= (a + n) * (1.0 - a + n) / ((n + 2.0) * (n + 1.0)) * x
        acc.add(term)
        if abs(term) <= tol * abs(acc.total):
            return HALF_PI * acc.value
    raise ConvergenceError(f"E_a - r'^2 K_a series did not converge at r^2 = {x}")


def em_combo(
    a: float | Param, p: float | ModulusPoint, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """E_a - r'^2 K_a, positive and O(r^2) as r -> 0.

    Series route away from r = 1; near r = 1 the subtraction is safe because
    r'^2 K_a -> 0.
    """
    a, p = as_param(a), as_point(p)
    if _near_one(p, cfg):
        if p.rp2 == 0.0:
            return elle_gen(a, p, cfg)
        return elle_gen(a, p, cfg) - p.rp2 * ellk_gen(a, p, cfg)
    return p.r2 * em_combo_scaled(a, p, cfg)


def k_minus_e_scaled(
    a: float | Param, p: float | ModulusPoint, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """(K_a - E_a) / r^2, summed termwise from both series (no cancellation)."""
    a, p = as_param(a), as_point(p)
    if _near_one(p, cfg):
        return (ellk_gen(a, p, cfg) - elle_gen(a, p, cfg)) / p.r2
    x = p.r2
    k = 1.0  # (a)_n (1-a)_n / (n!)^2 x^n
    e = 1.0  # (a-1)_n (1-a)_n / (n!)^2 x^n
    acc = CompensatedSum()
    tol = cfg.rel_tol * (1.0 - x)
    for n in range(cfg.max_terms):
        k *= (a + n) * (1.0 - a + n) / ((n + 1.0) ** 2)
        e *= (a - 1.0 + n) * (1.0 - a + n) / ((n + 1.0) ** 2)
        term = k - e
        acc.add(term)
        if abs(term) <= tol * abs(acc.total):
            return HALF_PI * acc.value
        k *= x
        e *= x
    raise ConvergenceError(f"K_a - E_a series did not converge at r^2 = {x}")


def d_ellk_gen(
    a: float | Param, p: float | ModulusPoint, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """dK_a/dr = 2 (1-a) (E_a - r'^2 K_a) / (r r'^2)."""
    a, p = as_param(a), as_point(p)
    if p.rp2 == 0.0:
        raise DomainError("dK_a/dr is infinite at r = 1")
    if _near_one(p, cfg):
        return 2.0 * (1.0 - a) * em_combo(a, p, cfg) / (p.r * p.rp2)
    return 2.0 * (1.0 - a) * p.r * em_combo_scaled(a, p, cfg) / p.rp2


def d_elle_gen(
    a: float | Param, p: float | ModulusPoint, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """dE_a/dr = -2 (1-a) (K_a - E_a) / r."""
    a, p = as_param(a), as_point(p)
    if p.rp2 == 0.0:
        raise DomainError("dE_a/dr is infinite at r = 1")
    return -2.0 * (1.0 - a) * p.r * k_minus_e_scaled(a, p, cfg)
