from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from fracwave import (
    DegenerateOrder,
    DomainError,
    Method,
    Problem,
    SeriesPolicy,
    SpaceTimePoint,
    green_cauchy,
    green_signaling,
    profile,
    similarity,
)
from fracwave.moments import half_mass_cauchy
from fracwave.tables import FLAG_DOMAIN, FLAG_NONCONVERGENCE, FLAG_OK, FigureId

orders = st.floats(min_value=0.5, max_value=0.95)
positions = st.floats(min_value=0.01, max_value=4.0)
times = st.floats(min_value=0.1, max_value=10.0)


def test_similarity_variable():
    assert similarity(2.0, 4.0, 0.5) == 1.0
    assert similarity(-2.0, 4.0, 0.5) == 1.0
    with pytest.raises(DomainError):
        similarity(1.0, 0.0, 0.75)


def test_space_time_point_validation():
    with pytest.raises(DomainError):
        SpaceTimePoint(1.0, -1.0)
    with pytest.raises(DomainError):
        SpaceTimePoint(math.inf, 1.0)


def test_sample_fields():
    s = green_cauchy(0.3, 2.0, 0.75)
    assert s.point == SpaceTimePoint(0.3, 2.0)
    assert s.nu.nu == 0.75
    assert s.similarity_r == pytest.approx(0.3 / 2.0**0.75, rel=1e-15)
    assert s.method is Method.SERIES
    assert 0.0 <= s.abs_err_estimate <= 1e-13 * s.value
    assert float(s) == s.value


def test_domain_errors():
    with pytest.raises(DomainError):
        green_signaling(0.0, 1.0, 0.75)
    with pytest.raises(DomainError):
        green_signaling(-1.0, 1.0, 0.75)
    with pytest.raises(DomainError):
        green_cauchy(1.0, 0.0, 0.75)
    with pytest.raises(DomainError):
        green_cauchy(1.0, 1.0, 0.45)
    with pytest.raises(DegenerateOrder):
        green_cauchy(1.0, 1.0, 1.0)


@given(orders, positions, times)
@settings(max_examples=60, deadline=None)
def test_cauchy_even_in_x(nu, x, t):
    assert green_cauchy(-x, t, nu).value == green_cauchy(x, t, nu).value


@given(orders, positions, times)
@settings(max_examples=60, deadline=None)
def test_reciprocity(nu, x, t):
    gc = green_cauchy(x, t, nu)
    gs = green_signaling(x, t, nu)
    lhs, rhs = 2.0 * nu * x * gc.value, t * gs.value
    assert abs(lhs - rhs) <= 1e-12 * abs(rhs) + 1e-300


@given(orders, positions, times, st.floats(min_value=0.2, max_value=5.0))
@settings(max_examples=60, deadline=None)
def test_scaling(nu, x, t, lam):
    # G_c(lambda^nu x, lambda t) = lambda^(-nu) G_c(x, t)
    a = green_cauchy(lam**nu * x, lam * t, nu).value
    b = lam ** (-nu) * green_cauchy(x, t, nu).value
    if b > 1e-250:
        r = similarity(x, t, nu)
        # relative sensitivity to rounding of r grows with the decay rate
        tol = 1e-13 * (1.0 + r ** (1.0 / (1.0 - nu)))
        assert a == pytest.approx(b, rel=tol)


@pytest.mark.parametrize("nu", [0.5, 0.6, 0.75, 0.9])
@pytest.mark.parametrize("t", [0.5, 2.0])
def test_cauchy_normalization(nu, t):
    # half of the unit mass lies on x > 0
    assert half_mass_cauchy(60.0 * t**nu, t, nu) == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("t", [0.5, 1.0, 3.0])
def test_half_order_closed_forms(t):
    for x in (0.1, 1.0, 4.0):
        heat = math.exp(-x * x / (4 * t)) / (2 * math.sqrt(math.pi * t))
        assert green_cauchy(x, t, 0.5).value == pytest.approx(heat, rel=1e-13)
        levy = x / (2 * math.sqrt(math.pi) * t**1.5) * math.exp(-x * x / (4 * t))
        assert green_signaling(x, t, 0.5).value == pytest.approx(levy, rel=1e-13)


def test_profile_table():
    xs = np.linspace(0.0, 3.0, 7)
    tab = profile(Problem.SIGNALING, 1.0, 0.75, xs)
    assert tab.figure_id is FigureId.GREEN_PROFILES
    assert list(tab.columns) == ["x", "G_s", "G_s_err", "flag"]
    assert tab.units["G_s"] == "1/time"
    # x = 0 is outside the signaling domain
    assert tab["flag"][0] == FLAG_DOMAIN and math.isnan(tab["G_s"][0])
    assert np.all(tab["flag"][1:] == FLAG_OK)
    for x, g in zip(xs[1:], tab["G_s"][1:]):
        assert g == green_signaling(x, 1.0, 0.75).value

    tab = profile("cauchy", 1.0, 0.75, xs)
    assert np.all(tab["flag"] == FLAG_OK)
    assert tab.units["G_c"] == "1/length"


def test_profile_flags_nonconvergence():
    starved = SeriesPolicy(max_terms=10, asymptotic_crossover=10.0)
    tab = profile(Problem.CAUCHY, 1.0, 0.75, [0.001, 4.0], starved)
    assert tab["flag"][0] == FLAG_OK
    assert tab["flag"][1] == FLAG_NONCONVERGENCE
    assert math.isnan(tab["G_c"][1])


def test_profile_rejects_empty_grid():
    with pytest.raises(DomainError):
        profile(Problem.CAUCHY, 1.0, 0.75, [])


@pytest.mark.parametrize("nu", [0.5, 0.7, 0.9])
def test_signaling_is_a_density_in_time(nu):
    def f(t):
        return green_signaling(1.0, t, nu).value

    pieces = [(1e-6, 1.0), (1.0, 100.0), (100.0, 1e4), (1e4, np.inf)]
    total = sum(quad(f, a, b, limit=200, epsabs=1e-13, epsrel=1e-12)[0] for a, b in pieces)
    assert total == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("nu", [0.6, 0.8])
def test_signaling_time_centroid_diverges(nu):
    # t G_s(x, t) ~ nu x t^(-nu) / Gamma(1 - nu), so the truncated first moment grows like T^(1-nu)
    def tail(t1, t2):
        return quad(lambda t: t * green_signaling(1.0, t, nu).value, t1, t2, limit=200)[0]

    predicted = nu / math.gamma(1.0 - nu) * (1e6 ** (1 - nu) - 1e4 ** (1 - nu)) / (1 - nu)
    assert tail(1e4, 1e6) == pytest.approx(predicted, rel=1e-2)
