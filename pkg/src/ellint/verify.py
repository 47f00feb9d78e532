"""Numerical certification of every inequality, limit and sharpness claim.

Each check returns a :class:`CheckResult`; ``run_all`` runs the catalogue.
``level="quick"`` divides grid sizes by ten.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Literal, Sequence

import numpy as np

from . import bounds, elliptic, ramanujan
from .bounds import SharpConstants, sharp_constants
from .elliptic import ModulusPoint
from .special_core import DEFAULT_CONFIG, EvalConfig, hyp2f1_k_near_one, hyp2f1_series

Level = Literal["quick", "full"]

LOG2 = math.log(2.0)
A_GRID = [0.025 * k for k in range(1, 21)]
FD_STEP = 1e-5


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    worst: dict = field(default_factory=dict)
    seconds: float = 0.0

    def __post_init__(self) -> None:
        self.passed = bool(self.passed)
        self.worst = {k: float(v) for k, v in self.worst.items()}

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name} ({self.seconds:.2f}s)"
        if self.detail:
            text += f": {self.detail}"
        if not self.passed and self.worst:
            text += " worst=" + ", ".join(f"{k}={v:.17g}" for k, v in self.worst.items())
        return text


def _count(n: int, level: Level, floor: int = 3) -> int:
    return n if level == "full" else max(floor, n // 10)


def first_monotonicity_violation(values: Sequence[float], increasing: bool) -> int | None:
    """Index i where values[i] -> values[i+1] breaks strict monotonicity."""
    for i in range(len(values) - 1):
        step = values[i + 1] - values[i]
        if (step <= 0.0) if increasing else (step >= 0.0):
            return i
    return None


def agm_k(r: float) -> float:
    """Legendre K(r) = pi / (2 AGM(1, r')), the classical oracle for a = 1/2."""
    x, y = 1.0, math.sqrt((1.0 - r) * (1.0 + r))
    for _ in range(64):
        if abs(x - y) <= 4e-16 * x:
            break
        x, y = 0.5 * (x + y), math.sqrt(x * y)
    return math.pi / (x + y)


def _x_grid(level: Level) -> np.ndarray:
    return np.linspace(0.001, 0.5, _count(1000, level) + 1)[1:]


def check_ramanujan(level: Level = "full", cfg: EvalConfig = DEFAULT_CONFIG) -> CheckResult:
    target = 4.0 * LOG2
    errs = {
        "r_def(1/2)": abs(ramanujan.r_def(0.5) - target) / target,
        "r_series(1/2)": abs(ramanujan.r_series(0.5, cfg) - target) / target,
    }
    worst_x, worst = 0.0, 0.0
    for x in _x_grid(level):
        d = ramanujan.r_def(x)
        rel = abs(d - ramanujan.r_series(x, cfg)) / d
        if rel > worst:
            worst_x, worst = x, rel
    ok = max(errs.values()) <= 1e-13 and worst <= 1e-12
    return CheckResult(
        "ramanujan_dual_route",
        ok,
        f"R(1/2) rel err {max(errs.values()):.1e}, max dual-route rel gap {worst:.1e}",
        {"x": worst_x, "gap": worst},
    )


def check_xi(level: Level = "full") -> CheckResult:
    xs = _x_grid(level)
    vals = [ramanujan.xi(x) for x in xs]
    bad = first_monotonicity_violation(vals, increasing=True)
    small = ramanujan.xi(1e-4)
    end = abs(ramanujan.xi(0.5) - (4.0 - 4.0 * LOG2))
    in_range = all(1.0 < v <= 4.0 - 4.0 * LOG2 + 1e-12 for v in vals)
    ok = bad is None and 1.0 < small < 1.001 and end <= 1e-12 and in_range
    worst = {"x": xs[bad]} if bad is not None else {}
    return CheckResult("xi_range_monotone", ok, f"xi(1e-4)={small:.6f}, |xi(1/2)-target|={end:.1e}", worst)


def check_eta(level: Level = "full") -> CheckResult:
    xs = _x_grid(level)
    vals = [ramanujan.eta(x) for x in xs]
    bad = first_monotonicity_violation(vals, increasing=False)
    lo, hi = 4.0 * math.pi - 16.0 * LOG2, math.pi**2 / 6.0
    small = abs(ramanujan.eta(1e-4) - hi)
    end = abs(ramanujan.eta(0.5) - lo)
    in_range = all(lo - 1e-12 <= v < hi for v in vals)
    ok = bad is None and small <= 1e-3 and end <= 1e-12 and in_range
    worst = {"x": xs[bad]} if bad is not None else {}
    return CheckResult("eta_range_monotone", ok, f"|eta(1e-4)-pi^2/6|={small:.1e}, |eta(1/2)-target|={end:.1e}", worst)


def printed_digits(value: float, places: int = 3) -> str:
    """Leading decimals as written with a trailing ellipsis (truncated, not rounded)."""
    return f"{math.floor(value * 10**places) / 10**places:.{places}f}"


def check_positivity(level: Level = "full") -> CheckResult:
    xs = _x_grid(level)
    worst, worst_x, worst_name = math.inf, 0.0, ""
    for name, fn in (
        ("cor24", ramanujan.cor24_gap),
        ("cor25", ramanujan.cor25_gap),
        ("sine", ramanujan.sine_gap),
    ):
        for x in xs:
            g = fn(x)
            if g < worst:
                worst, worst_x, worst_name = g, x, name
    c24 = (20.0 * LOG2 - 4.0) * math.pi - 64.0 * LOG2**2
    c25 = math.log(16.0) - math.pi**2 / 6.0
    ok = worst > 0.0 and printed_digits(c24) == "0.236" and printed_digits(c25) == "1.127"
    return CheckResult(
        "inequality_gaps_positive",
        ok,
        f"min gap {worst:.3e} ({worst_name}), constants {printed_digits(c24)}... / {printed_digits(c25)}...",
        {"x": worst_x, "gap": worst},
    )


def check_legendre(level: Level = "full", cfg: EvalConfig = DEFAULT_CONFIG) -> CheckResult:
    rs = np.linspace(0.01, 0.9999, _count(50, level))
    worst, worst_r = 0.0, 0.0
    for r in rs:
        k = agm_k(r)
        rel = abs(elliptic.ellk_gen(0.5, r, cfg) - k) / k
        if rel > worst:
            worst, worst_r = rel, r
    c = sharp_constants(0.5)
    exp_half_r = math.exp(ramanujan.r_def(0.5) / 2.0)
    form_err = 0.0
    for r in rs:
        rep = bounds.envelope(0.5, r, cfg)
        rp2 = (1.0 - r) * (1.0 + r)
        log4 = math.log(4.0 / math.sqrt(rp2))
        form_err = max(
            form_err,
            abs(rep.lower - (1.0 + (math.pi / (4.0 * LOG2) - 1.0) * rp2) * log4) / rep.lower,
            abs(rep.upper - (1.0 + 0.25 * rp2) * log4) / rep.upper,
        )
    ok = (
        worst <= 1e-12
        and abs(exp_half_r - 4.0) <= 1e-14
        and c.beta0 == 0.25
        and abs(c.alpha0 - (math.pi / (4.0 * LOG2) - 1.0)) <= 1e-14
        and form_err <= 1e-13
    )
    return CheckResult(
        "legendre_regression",
        ok,
        f"max rel err vs AGM {worst:.1e}, bound-form err {form_err:.1e}",
        {"r": worst_r, "rel_err": worst},
    )


def _central(f: Callable[[float], float], r: float, h: float = FD_STEP) -> float:
    return (f(r + h) - f(r - h)) / (2.0 * h)


def derivative_errors(a: float, r: float, cfg: EvalConfig = DEFAULT_CONFIG) -> dict[str, float]:
    """Relative gaps between the closed-form derivatives and central differences."""
    K = lambda t: elliptic.ellk_gen(a, t, cfg)  # noqa: E731
    E = lambda t: elliptic.elle_gen(a, t, cfg)  # noqa: E731
    M = lambda t: elliptic.em_combo(a, t, cfg)  # noqa: E731
    p = ModulusPoint.from_r(r)
    rp2 = p.rp2
    pairs = {
        "dK": (elliptic.d_ellk_gen(a, p, cfg), _central(K, r)),
        "dE": (elliptic.d_elle_gen(a, p, cfg), _central(E, r)),
        "d(K-E)": (
            2.0 * (1.0 - a) * r * E(r) / rp2,
            _central(lambda t: K(t) - E(t), r),
        ),
        "d(E-r'^2K)": (2.0 * a * r * K(r), _central(M, r)),
    }
    return {k: abs(exact - fd) / abs(exact) for k, (exact, fd) in pairs.items()}


def check_derivatives(level: Level = "full", cfg: EvalConfig = DEFAULT_CONFIG) -> CheckResult:
    n = _count(20, level)
    a_grid = np.linspace(0.025, 0.5, n)
    r_grid = np.linspace(0.05, 0.95, n)
    worst, where = 0.0, {}
    for a in a_grid:
        for r in r_grid:
            for name, err in derivative_errors(a, r, cfg).items():
                if err > worst:
                    worst, where = err, {"a": a, "r": r, "rel_err": err}
    return CheckResult("derivative_identities", worst <= 1e-6, f"max rel err {worst:.1e}", where)


def envelope_r_grid(level: Level = "full") -> list[ModulusPoint]:
    """r from 1e-6 up to r'^2 = 1e-10: half log-spaced in r, half in r'^2."""
    half = _count(100, level)
    small = [ModulusPoint.from_r(r) for r in np.geomspace(1e-6, math.sqrt(0.5), half)]
    large = [ModulusPoint.from_rp2(y) for y in np.geomspace(0.5, 1e-10, half + 1)[1:]]
    return small + large


def check_envelope(
    level: Level = "full",
    cfg: EvalConfig = DEFAULT_CONFIG,
    constants_fn: Callable[[float], SharpConstants] = sharp_constants,
) -> CheckResult:
    a_grid = A_GRID if level == "full" else A_GRID[1::10] + [0.5]
    reports = bounds.envelope_scan(a_grid, envelope_r_grid(level), cfg, constants_fn)
    worst = min(reports, key=lambda rep: min(rep.lower_margin, rep.upper_margin))
    margins_ok = all(rep.lower_margin > 0.0 and rep.upper_margin > 0.0 for rep in reports)
    lim0 = lim1 = 0.0
    for a in a_grid:
        c = constants_fn(a)
        lim0 = max(lim0, abs(bounds.ratio_rho(a, 1e-6, cfg) - (1.0 + c.alpha0)))
        lim1 = max(lim1, abs(bounds.ratio_rho(a, ModulusPoint.from_rp2(1e-10), cfg) - 1.0))
    ok = margins_ok and lim0 <= 1e-6 and lim1 <= 1e-4
    return CheckResult(
        "envelope",
        ok,
        f"{len(reports)} points, |rho(0+)-(1+alpha0)|={lim0:.1e}, |rho(1-)-1|={lim1:.1e}",
        {
            "a": worst.a,
            "r": worst.r,
            "lower_margin": worst.lower_margin,
            "upper_margin": worst.upper_margin,
        },
    )


def check_sharpness(
    level: Level = "full", cfg: EvalConfig = DEFAULT_CONFIG, eps: float = 0.01
) -> CheckResult:
    found = []
    for a in (0.1, 0.2, 0.3, 0.4, 0.5):
        c = sharp_constants(a)
        for side, lam in (("lower", c.alpha0 + eps), ("upper", c.beta0 - eps)):
            try:
                found.append(bounds.sharpness_scan(a, lam, side, cfg))
            except bounds.WitnessNotFound:
                return CheckResult("sharpness_witnesses", False, f"none for a={a}, side={side}", {"a": a, "lam": lam})
    return CheckResult("sharpness_witnesses", True, f"{len(found)} witnesses")


def check_lemma33(level: Level = "full", cfg: EvalConfig = DEFAULT_CONFIG) -> CheckResult:
    rs = np.linspace(1e-3, 0.999, _count(1000, level))
    worst_end = 0.0
    for a in (0.1, 0.2, 0.3, 0.4, 0.5):
        vals = [bounds.f_lemma33(a, r, cfg) for r in rs]
        bad = first_monotonicity_violation(vals, increasing=True)
        if bad is not None:
            return CheckResult("lemma33_F", False, "not increasing", {"a": a, "r": rs[bad]})
        s = math.sin(math.pi * a)
        q = a * (1.0 - a)
        lo = s - math.pi * q - 0.5 * math.pi * q * q
        hi = q * s
        worst_end = max(
            worst_end,
            abs(bounds.f_lemma33(a, 1e-3, cfg) - lo),
            abs(bounds.f_lemma33(a, ModulusPoint.from_rp2(1e-8), cfg) - hi),
        )
    return CheckResult("lemma33_F", worst_end <= 1e-6, f"max endpoint err {worst_end:.1e}", {"err": worst_end})


def h_identity_error(a: float, lam: float, r: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Relative gap between dH/dr (central difference) and 2 lam r s G_lam(r)."""
    s = math.sin(math.pi * a)
    exact = 2.0 * lam * r * s * bounds.g_lambda(a, lam, r, cfg)
    fd = _central(lambda t: bounds.h_lambda(a, lam, t, cfg), r)
    return abs(fd - exact) / abs(exact)


def identity_lambdas(a: float) -> list[float]:
    """lambda values on which G keeps one sign: below min(l1, l2) and above beta0."""
    c = sharp_constants(a)
    return [0.5 * min(c.lambda1, c.lambda2), c.beta0, 2.0 * c.beta0]


def check_lemma34(level: Level = "full", cfg: EvalConfig = DEFAULT_CONFIG) -> CheckResult:
    flip_ok, beta_err = True, 0.0
    for a in A_GRID:
        c = sharp_constants(a)
        below = bounds.g_lambda(a, c.lambda1 - 1e-6, 1e-6, cfg)
        above = bounds.g_lambda(a, c.lambda1 + 1e-6, 1e-6, cfg)
        flip_ok &= below > 0.0 > above
        g1 = bounds.g_lambda(a, c.beta0, ModulusPoint.from_rp2(1e-8), cfg)
        beta_err = max(beta_err, abs(g1 - (1.0 - 1.0 / (2.0 * c.beta0))))
    n = _count(10, level)
    worst, where = 0.0, {}
    for a in np.linspace(0.05, 0.5, n):
        for lam in identity_lambdas(a):
            for r in np.linspace(0.05, 0.95, n):
                err = h_identity_error(a, lam, r, cfg)
                if err > worst:
                    worst, where = err, {"a": a, "lambda": lam, "r": r, "rel_err": err}
    ok = flip_ok and beta_err <= 1e-4 and worst <= 1e-6
    return CheckResult(
        "lemma34_G_limits",
        ok,
        f"sign flip {'ok' if flip_ok else 'BROKEN'}, |G_beta(1-)-limit|={beta_err:.1e}, dH/dr identity rel err {worst:.1e}",
        where,
    )


def sign_changes(values: Sequence[float]) -> list[int]:
    """Indices where the sign of consecutive differences changes."""
    steps = np.sign(np.diff(values))
    return [i for i in range(len(steps) - 1) if steps[i] != steps[i + 1]]


def check_g_pattern(level: Level = "full", cfg: EvalConfig = DEFAULT_CONFIG) -> CheckResult:
    rs = np.linspace(0.01, 0.99, _count(200, level, floor=40))
    for a in (0.1, 0.25, 0.4, 0.5):
        c = sharp_constants(a)
        cases = [(0.5 * c.lambda2, "up"), (c.beta0, "down"), (2.0 * c.beta0, "down")]
        if c.lambda2 < c.beta0:
            cases.append((0.5 * (c.lambda2 + c.beta0), "valley"))
        for lam, shape in cases:
            vals = [bounds.g_lambda(a, lam, r, cfg) for r in rs]
            steps = np.diff(vals)
            if shape == "up":
                ok = bool(np.all(steps > 0))
            elif shape == "down":
                ok = bool(np.all(steps < 0))
            else:
                ok = len(sign_changes(vals)) == 1 and steps[0] < 0 < steps[-1]
            if not ok:
                return CheckResult("lemma34_G_monotone", False, f"{shape} pattern broken", {"a": a, "lambda": lam})
    return CheckResult("lemma34_G_monotone", True, "increasing, decreasing and valley shapes hold")


def check_constants(level: Level = "full") -> CheckResult:
    for a in np.linspace(0.01, 0.5, _count(50, level)):
        c = sharp_constants(a)
        if not (0.0 < c.lambda1 < c.alpha0 < c.beta0 <= 0.25 and c.lambda2 > 0.0):
            return CheckResult("constant_ordering", False, "ordering broken", {"a": a})
    return CheckResult("constant_ordering", True, "lambda1 < alpha0 < beta0 <= 1/4, lambda2 > 0")


def check_elliptic(level: Level = "full", cfg: EvalConfig = DEFAULT_CONFIG) -> CheckResult:
    rs = np.linspace(0.001, 0.999, _count(1000, level))
    for a in (0.05, 0.25, 0.5):
        k = [elliptic.ellk_gen(a, r, cfg) for r in rs]
        e = [elliptic.elle_gen(a, r, cfg) for r in rs]
        if first_monotonicity_violation(k, True) is not None or first_monotonicity_violation(e, False) is not None:
            return CheckResult("elliptic_monotone_dual_route", False, "monotonicity broken", {"a": a})
    worst = 0.0
    for a in np.arange(0.05, 0.5001, 0.05):
        for y in (cfg.near_one_cut, 1.5 * cfg.near_one_cut, 2.0 * cfg.near_one_cut):
            series = hyp2f1_series(a, 1.0 - a, 1.0, 1.0 - y, cfg)
            wide = EvalConfig(cfg.rel_tol, cfg.max_terms, min(0.99, 2.0 * cfg.near_one_cut))
            near = hyp2f1_k_near_one(a, 1.0 - y, wide, one_minus_x=y)
            worst = max(worst, abs(series - near) / series)
    return CheckResult("elliptic_monotone_dual_route", worst <= 1e-12, f"K/E monotone, overlap gap {worst:.1e}")


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "ramanujan_dual_route": check_ramanujan,
    "xi_range_monotone": check_xi,
    "eta_range_monotone": check_eta,
    "inequality_gaps_positive": check_positivity,
    "legendre_regression": check_legendre,
    "derivative_identities": check_derivatives,
    "envelope": check_envelope,
    "sharpness_witnesses": check_sharpness,
    "lemma33_F": check_lemma33,
    "lemma34_G_limits": check_lemma34,
    "lemma34_G_monotone": check_g_pattern,
    "constant_ordering": check_constants,
    "elliptic_monotone_dual_route": check_elliptic,
}


def run_check(name: str, level: Level = "full", **kwargs) -> CheckResult:
    start = time.perf_counter()
    result = CHECKS[name](level, **kwargs)
    result.seconds = time.perf_counter() - start
    return result


def run_all(level: Level = "full") -> list[CheckResult]:
    return [run_check(name, level) for name in CHECKS]
