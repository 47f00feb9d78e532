"""Acceptance criteria 1-11. Each test prints one PASS/FAIL line, shown even
under output capture.
"""

import io
import math
import time

import numpy as np
import pytest

from ellint import cli, ramanujan
from ellint.bounds import (
    envelope_scan,
    f_lemma33,
    g_lambda,
    h_lambda,
    ratio_rho,
    sharp_constants,
    sharpness_scan,
)
from ellint.elliptic import ModulusPoint, d_elle_gen, d_ellk_gen, elle_gen, ellk_gen

from oracles import agm_legendre_k

LOG2 = math.log(2.0)
GRID_1000 = np.linspace(0.001, 0.5, 1001)[1:]


_capsys = None


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    global _capsys
    _capsys = capsys
    yield
    _capsys = None


def report(number, title, ok, seconds, limit, detail):
    ok = bool(ok) and seconds < limit
    status = "PASS" if ok else "FAIL"
    with _capsys.disabled():
        print(f"\n[{status}] criterion {number}: {title} ({seconds:.2f}s < {limit:g}s) {detail}")
    return ok


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def strictly(values, increasing):
    steps = np.diff(values)
    return bool(np.all(steps > 0) if increasing else np.all(steps < 0))


def test_criterion_01_ramanujan_dual_route():
    with Timer() as t:
        target = 4 * LOG2
        e_def = abs(ramanujan.r_def(0.5) - target) / target
        e_ser = abs(ramanujan.r_series(0.5) - target) / target
        gap = max(abs(ramanujan.r_def(x) - ramanujan.r_series(x)) / ramanujan.r_def(x) for x in GRID_1000)
    ok = report(
        1, "R(1/2) = 4 log 2, dual route", e_def <= 1e-13 and e_ser <= 1e-13 and gap <= 1e-12,
        t.seconds, 1, f"rel err {max(e_def, e_ser):.1e}, dual gap {gap:.1e}",
    )
    assert ok


def test_criterion_02_xi():
    with Timer() as t:
        small = ramanujan.xi(1e-4)
        end = abs(ramanujan.xi(0.5) - (4 - 4 * LOG2))
        mono = strictly([ramanujan.xi(x) for x in GRID_1000], increasing=True)
    ok = report(
        2, "xi range and monotonicity", 1 < small < 1.001 and end <= 1e-12 and mono,
        t.seconds, 1, f"xi(1e-4)={small:.8f}, |xi(1/2)-(4-4log2)|={end:.1e}",
    )
    assert ok


def test_criterion_03_eta():
    with Timer() as t:
        small = abs(ramanujan.eta(1e-4) - math.pi**2 / 6)
        end = abs(ramanujan.eta(0.5) - (4 * math.pi - 16 * LOG2))
        mono = strictly([ramanujan.eta(x) for x in GRID_1000], increasing=False)
    ok = report(
        3, "eta range and monotonicity", small <= 1e-3 and end <= 1e-12 and mono,
        t.seconds, 1, f"|eta(1e-4)-pi^2/6|={small:.1e}, |eta(1/2)-(4pi-16log2)|={end:.1e}",
    )
    assert ok


def truncated(value, places=3):
    return f"{math.floor(value * 10**places) / 10**places:.{places}f}"


def test_criterion_04_positivity():
    with Timer() as t:
        worst = min(
            fn(x) for fn in (ramanujan.cor24_gap, ramanujan.cor25_gap, ramanujan.sine_gap) for x in GRID_1000
        )
        c24 = (20 * LOG2 - 4) * math.pi - 64 * LOG2**2
        c25 = math.log(16) - math.pi**2 / 6
        digits = (truncated(c24), truncated(c25))
    ok = report(
        4, "inequality gaps positive, printed constants", worst > 0 and digits == ("0.236", "1.127"),
        t.seconds, 1, f"min gap {worst:.3e}, constants {digits[0]}..., {digits[1]}...",
    )
    assert ok


def test_criterion_05_legendre_regression():
    with Timer() as t:
        rs = np.linspace(0.01, 0.9999, 50)
        err = max(abs(ellk_gen(0.5, r) - agm_legendre_k(r)) / agm_legendre_k(r) for r in rs)
        c = sharp_constants(0.5)
        e_half = math.exp(ramanujan.r_def(0.5) / 2)
        forms = abs(e_half - 4) <= 4e-15 and c.beta0 == 0.25
        forms &= abs(c.alpha0 - (math.pi / (4 * LOG2) - 1)) <= 1e-15
        # bounds reduce to log(4/r') (1 + c r'^2)
        for r in (0.3, 0.7, 0.95):
            rp2 = 1 - r * r
            rho = ratio_rho(0.5, r)
            direct = ellk_gen(0.5, r) / math.log(4 / math.sqrt(rp2))
            forms &= abs(rho - direct) <= 1e-14 * direct
            forms &= 1 + c.alpha0 * rp2 < direct < 1 + 0.25 * rp2
    ok = report(
        5, "a = 1/2 regression vs AGM", err <= 1e-12 and forms,
        t.seconds, 1, f"max rel err vs AGM {err:.1e}, e^(R/2)={e_half!r}",
    )
    assert ok


def test_criterion_06_derivatives():
    h = 1e-5
    with Timer() as t:
        worst = 0.0
        for a in np.linspace(0.025, 0.5, 20):
            for r in np.linspace(0.05, 0.95, 20):
                fd_k = (ellk_gen(a, r + h) - ellk_gen(a, r - h)) / (2 * h)
                fd_e = (elle_gen(a, r + h) - elle_gen(a, r - h)) / (2 * h)
                worst = max(
                    worst,
                    abs(d_ellk_gen(a, r) - fd_k) / abs(fd_k),
                    abs(d_elle_gen(a, r) - fd_e) / abs(fd_e),
                )
    ok = report(6, "derivative identities vs central differences", worst <= 1e-6, t.seconds, 5, f"max rel err {worst:.1e}")
    assert ok


def test_criterion_07_envelope():
    with Timer() as t:
        a_grid = np.linspace(0.025, 0.5, 20)
        small = [ModulusPoint.from_r(r) for r in np.geomspace(1e-6, math.sqrt(0.5), 100)]
        large = [ModulusPoint.from_rp2(y) for y in np.geomspace(0.5, 1e-10, 101)[1:]]
        reports = envelope_scan(a_grid, small + large)
        min_lower = min(r.lower_margin for r in reports)
        min_upper = min(r.upper_margin for r in reports)
        lim0 = max(abs(ratio_rho(a, 1e-6) - (1 + sharp_constants(a).alpha0)) for a in a_grid)
        lim1 = max(abs(ratio_rho(a, ModulusPoint.from_rp2(1e-10)) - 1) for a in a_grid)
    ok = report(
        7, "two-sided envelope on 20x200 grid",
        len(reports) == 4000 and min_lower > 0 and min_upper > 0 and lim0 <= 1e-6 and lim1 <= 1e-4,
        t.seconds, 30,
        f"min margins {min_lower:.2e}/{min_upper:.2e}, |rho(0+)-(1+a0)|={lim0:.1e}, |rho(1-)-1|={lim1:.1e}",
    )
    assert ok


def test_criterion_08_sharpness():
    with Timer() as t:
        witnesses = []
        for a in (0.1, 0.2, 0.3, 0.4, 0.5):
            c = sharp_constants(a)
            witnesses.append(sharpness_scan(a, c.alpha0 + 0.01, "lower"))
            witnesses.append(sharpness_scan(a, c.beta0 - 0.01, "upper"))
    ok = report(
        8, "sharpness witnesses", len(witnesses) == 10 and all(w.gap > 0 for w in witnesses),
        t.seconds, 5, f"smallest upper r'^2 {min(w.rp2 for w in witnesses if w.side == 'upper'):.1e}",
    )
    assert ok


def test_criterion_09_lemma33():
    with Timer() as t:
        rs = np.linspace(1e-3, 0.999, 1000)
        mono, end = True, 0.0
        for a in (0.1, 0.2, 0.3, 0.4, 0.5):
            s, q = math.sin(math.pi * a), a * (1 - a)
            mono &= strictly([f_lemma33(a, r) for r in rs], increasing=True)
            end = max(
                end,
                abs(f_lemma33(a, 1e-3) - (s - math.pi * q - 0.5 * math.pi * q * q)),
                abs(f_lemma33(a, ModulusPoint.from_rp2(1e-8)) - q * s),
            )
    ok = report(9, "F increasing with endpoint limits", mono and end <= 1e-6, t.seconds, 5, f"endpoint err {end:.1e}")
    assert ok


def test_criterion_10_lemma34():
    h = 1e-5
    with Timer() as t:
        flip, beta_err, ident = True, 0.0, 0.0
        for a in np.linspace(0.025, 0.5, 20):
            c = sharp_constants(a)
            s = math.sin(math.pi * a)
            flip &= g_lambda(a, c.lambda1 - 1e-6, 1e-6) > 0 > g_lambda(a, c.lambda1 + 1e-6, 1e-6)
            g1 = g_lambda(a, c.beta0, ModulusPoint.from_rp2(1e-8))
            beta_err = max(beta_err, abs(g1 - (1 - 1 / (2 * c.beta0))))
            for lam in (0.5 * min(c.lambda1, c.lambda2), c.beta0, 2 * c.beta0):
                for r in np.linspace(0.05, 0.95, 10):
                    fd = (h_lambda(a, lam, r + h) - h_lambda(a, lam, r - h)) / (2 * h)
                    exact = 2 * lam * r * s * g_lambda(a, lam, r)
                    ident = max(ident, abs(fd - exact) / abs(exact))
    ok = report(
        10, "G limits and H' identity", flip and beta_err <= 1e-4 and ident <= 1e-6,
        t.seconds, 10, f"|G_beta0(1-)-limit|={beta_err:.1e}, identity rel err {ident:.1e}",
    )
    assert ok


@pytest.mark.slow
def test_criterion_11_verify_full():
    out = io.StringIO()
    with Timer() as t:
        code = cli.main(["verify", "--level", "full"], out=out)
    lines = out.getvalue().splitlines()
    ok = report(11, "verify full", code == 0, t.seconds, 300, lines[-1] if lines else "")
    assert ok, out.getvalue()
