import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ellint.errors import DomainError
from ellint.ramanujan import (
    cor24_gap,
    cor25_gap,
    eta,
    r_def,
    r_series,
    rs_product,
    sine_gap,
    xi,
)
from ellint.special_core import zeta_int

from oracles import ref_r

LOG2 = math.log(2.0)
X = st.floats(1e-4, 0.5)


class TestR:
    def test_half(self):
        assert r_def(0.5) == pytest.approx(4 * LOG2, rel=1e-15)
        assert r_series(0.5) == pytest.approx(4 * LOG2, rel=1e-15)

    def test_pole(self):
        assert 1e-7 * r_def(1e-7) == pytest.approx(1.0, rel=1e-12)
        assert r_series(1e-7) - 1e7 == pytest.approx(0.0, abs=1e-9)

    def test_tenth(self):
        # 10 + 2 zeta(3)/100 + 2 zeta(5)/10^4 + ... summed independently
        partial = 10.0 + math.fsum(2 * zeta_int(2 * k + 1) * 0.01**k for k in range(1, 20))
        assert r_series(0.1) == pytest.approx(partial, rel=1e-15)
        assert r_series(0.1) == pytest.approx(10.0242505605, abs=1e-10)

    def test_dual_route_quarter(self):
        assert r_def(0.25) == pytest.approx(r_series(0.25), rel=1e-13)

    @given(X)
    def test_dual_route(self, x):
        assert r_def(x) == pytest.approx(r_series(x), rel=1e-13)

    @given(X)
    def test_against_mpmath(self, x):
        assert r_def(x) == pytest.approx(float(ref_r(x)), rel=5e-16)

    @given(X)
    def test_truncation_is_sound(self, x):
        assert r_series(x, extra_terms=20) == pytest.approx(r_series(x), rel=1e-15)

    @given(X)
    def test_positive(self, x):
        assert r_def(x) > 0.0

    def test_decreasing(self):
        grid = np.linspace(1e-3, 0.5, 1000)
        assert np.all(np.diff([r_def(x) for x in grid]) < 0)

    @pytest.mark.parametrize("fn", [r_def, r_series, xi, eta, rs_product, cor24_gap, cor25_gap, sine_gap])
    @pytest.mark.parametrize("x", [0.0, -0.1, 0.51])
    def test_domain(self, fn, x):
        with pytest.raises(DomainError):
            fn(x)


class TestXi:
    def test_half(self):
        assert xi(0.5) == pytest.approx(4 - 4 * LOG2, abs=1e-12)
        assert xi(0.5) == pytest.approx(1.2274112777, abs=1e-10)

    def test_small(self):
        assert 1.0 < xi(1e-4) < 1.001

    def test_quarter(self):
        value = xi(0.25)
        assert 1.0 < value < 1.2274112778
        assert value == pytest.approx(1 / (0.25 * 0.75) - float(ref_r(0.25)), rel=1e-13)

    def test_increasing(self):
        grid = np.linspace(1e-3, 0.5, 1000)
        assert np.all(np.diff([xi(x) for x in grid]) > 0)


class TestEta:
    def test_half(self):
        assert eta(0.5) == pytest.approx(4 * math.pi - 16 * LOG2, abs=1e-12)
        assert eta(0.5) == pytest.approx(1.4760157254, abs=1e-10)

    def test_small(self):
        assert abs(eta(1e-4) - math.pi**2 / 6) < 1e-3

    def test_quarter(self):
        assert 4 * math.pi - 16 * LOG2 < eta(0.25) < math.pi**2 / 6

    def test_decreasing(self):
        grid = np.linspace(1e-3, 0.5, 1000)
        assert np.all(np.diff([eta(x) for x in grid]) < 0)


class TestProducts:
    def test_rs_endpoints(self):
        assert rs_product(0.5) == pytest.approx(4 * LOG2, rel=1e-15)
        assert rs_product(1e-6) == pytest.approx(math.pi, rel=1e-6)

    @given(X)
    def test_rs_range(self, x):
        assert 4 * LOG2 - 1e-15 <= rs_product(x) < math.pi

    def test_cor24_constant(self):
        const = (20 * LOG2 - 4) * math.pi - 64 * LOG2**2
        assert f"{const:.3f}" == "0.236"
        # common denominator of the two fractions at x = 1/2
        assert cor24_gap(0.5) == pytest.approx(const / (16 * LOG2 * (4 * LOG2 - 1)), rel=1e-13)

    def test_cor25_half(self):
        expected = 0.25 - (math.pi - 4 * LOG2) / (4 * LOG2)
        assert cor25_gap(0.5) == pytest.approx(expected, rel=1e-14)
        assert cor25_gap(0.5) == pytest.approx(0.1169099645, abs=1e-10)

    def test_sine_gap_values(self):
        assert sine_gap(0.5) == pytest.approx(1 - 9 * math.pi / 32, rel=1e-15)
        assert abs(sine_gap(1e-4)) < 1e-3

    @pytest.mark.parametrize("fn", [cor24_gap, cor25_gap, sine_gap])
    def test_positive_on_grid(self, fn):
        grid = np.linspace(1e-3, 0.5, 1000)
        assert all(fn(x) > 0.0 for x in grid)

    @pytest.mark.parametrize("x", [0.05, 0.1, 0.25, 0.49])
    def test_spot_positive(self, x):
        assert cor24_gap(x) > 0 and cor25_gap(x) > 0 and sine_gap(x) > 0
