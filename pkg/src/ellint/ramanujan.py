"""Ramanujan constant function R(x) = -2 gamma - psi(x) - psi(1-x) on (0, 1/2]
and the auxiliary quantities built from it.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .special_core import (
    DEFAULT_CONFIG,
    CompensatedSum,
    EvalConfig,
    ramanujan_digamma,
    zeta_int,
)

# x = 1/2 makes term k at most 2 zeta(3) 4^-k, below 1e-24 by k = 40
R_SERIES_MAX_K = 40


def _check(x: float) -> float:
    x = float(x)
    if not 0.0 < x <= 0.5:
        raise DomainError(f"argument must lie in (0, 1/2], got {x!r}")
    return x


def r_def(x: float) -> float:
    """R(x) through the digamma function."""
    return ramanujan_digamma(_check(x))


def _r_series_tail(x: float, cfg: EvalConfig, extra_terms: int = 0) -> float:
    """sum_{k>=1} 2 zeta(2k+1) x^{2k}, i.e. R(x) - 1/x."""
    x2 = x * x
    power = 1.0
    acc = CompensatedSum()
    stop = None
    for k in range(1, R_SERIES_MAX_K + extra_terms + 1):
        power *= x2
        term = 2.0 * zeta_int(2 * k + 1) * power
        acc.add(term)
        if stop is None and term < cfg.rel_tol * (1.0 / x + acc.total):
            stop = k + extra_terms
        if stop is not None and k >= stop:
            break
    return acc.value


def r_series(x: float, cfg: EvalConfig = DEFAULT_CONFIG, *, extra_terms: int = 0) -> float:
    """R(x) = 1/x + sum_{k>=1} 2 zeta(2k+1) x^{2k}.

    ``extra_terms`` keeps summing past the truncation point; used to check
    that truncation is sound.
    """
    x = _check(x)
    return 1.0 / x + _r_series_tail(x, cfg, extra_terms)


def xi(x: float) -> float:
    """1/(x(1-x)) - R(x), strictly increasing onto (1, 4 - 4 log 2].

    Evaluated as 1/(1-x) - (R(x) - 1/x) so the two O(1/x) pieces cancel
    exactly rather than in floating point.
    """
    x = _check(x)
    return 1.0 / (1.0 - x) - _r_series_tail(x, DEFAULT_CONFIG)


def eta(x: float) -> float:
    """(pi / sin(pi x) - R(x)) / (x (1-x)), strictly decreasing onto [4 pi - 16 log 2, pi^2/6)."""
    x = _check(x)
    return (math.pi / math.sin(math.pi * x) - r_def(x)) / (x * (1.0 - x))


def rs_product(x: float) -> float:
    """R(x) sin(pi x), strictly decreasing onto [4 log 2, pi)."""
    x = _check(x)
    return r_def(x) * math.sin(math.pi * x)


def cor24_gap(x: float) -> float:
    """[pi/(R sin) - 1] - [sin(pi x) - pi x (1-x)] / [sin(pi x) (R - 1)]; positive."""
    x = _check(x)
    R = r_def(x)
    s = math.sin(math.pi * x)
    return (math.pi / (R * s) - 1.0) - (s - math.pi * x * (1.0 - x)) / (s * (R - 1.0))


def cor25_gap(x: float) -> float:
    """x (1-x) - [pi - R sin(pi x)] / [R sin(pi x)]; positive."""
    x = _check(x)
    rs = rs_product(x)
    return x * (1.0 - x) - (math.pi - rs) / rs


def sine_gap(x: float) -> float:
    """sin(pi x) - (pi x (1-x) / 2) (2 + x (1-x)); positive on (0, 1/2]."""
    x = _check(x)
    q = x * (1.0 - x)
    return math.sin(math.pi * x) - 0.5 * math.pi * q * (2.0 + q)
