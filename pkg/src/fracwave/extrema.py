r"""Maxima of the Green functions and their propagation.

For :math:`1/2 < \nu < 1` the Cauchy Green function peaks at
:math:`x_* = \pm c_\nu t^\nu` where :math:`c_\nu` maximizes :math:`M_\nu`;
the signaling Green function peaks at :math:`x_* = d_\nu t^\nu` where
:math:`d_\nu` maximizes :math:`F_\nu(r) = \nu r M_\nu(r)`. The peak heights
are :math:`m_\nu t^{-\nu}` and :math:`n_\nu / t` with

.. math::

    m_\nu = \tfrac12 M_\nu(c_\nu)
          = \frac{1}{\pi} \int_0^\infty E_{2\nu}(-\tau^2) \cos(c_\nu \tau)\, d\tau,
    \qquad
    n_\nu = F_\nu(d_\nu)
          = \frac{2}{\pi} \int_0^\infty \tau E_{2\nu,2\nu}(-\tau^2)
            \sin(d_\nu \tau)\, d\tau.

Maxima are located by a coarse scan, golden-section refinement and a final
bisection on the sign of the derivative, which reaches tolerances well below
the square root of machine precision where value comparisons stall.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from fracwave.errors import DomainError, SolverFailure
from fracwave.green_functions import Problem, _check_time
from fracwave.quadrature import QuadPolicy, QuadResult, TrigKind, integrate_oscillatory
from fracwave.special_functions import (
    FractionalOrder,
    SeriesPolicy,
    as_order,
    mainardi_m,
    mainardi_m_derivative,
    mittag_leffler_array,
)

# {{{ policies and records


@dataclass(frozen=True)
class SolverPolicy:
    location_tol: float = 1.0e-10
    value_tol: float = 1.0e-12
    max_iter: int = 200
    scan_points: int = 256

    def __post_init__(self) -> None:
        if not (self.location_tol > 0 and self.value_tol > 0 and self.scan_points > 0):
            raise ValueError("solver tolerances and scan_points must be positive")
        if self.max_iter < 10:
            raise ValueError("max_iter must be at least 10")


@dataclass(frozen=True)
class ExtremumRecord:
    nu: FractionalOrder
    location: float
    value: float
    bracket: tuple[float, float]
    iterations: int
    converged: bool


DEFAULT_SOLVER = SolverPolicy()

# }}}


# {{{ generic maximizer

_GOLDEN = 0.5 * (math.sqrt(5.0) - 1.0)


def _maximize(
    f: Callable[[float], float],
    df: Callable[[float], float],
    lo: float,
    hi: float,
    policy: SolverPolicy,
    what: str,
) -> tuple[float, float, tuple[float, float], int, bool]:
    """Maximize a unimodal *f* on ``[lo, hi]`` given its derivative *df*."""
    xs = np.linspace(lo, hi, policy.scan_points + 1)
    fx = []
    for x in xs:
        fx.append(f(float(x)))
        # unimodal: once deep in the tail, later points cannot hold the maximum
        if fx[-1] < 1.0e-3 * max(fx):
            break
    i = int(np.argmax(fx))
    if i == xs.size - 1:
        raise SolverFailure(f"{what}: maximum not bracketed by the scan interval")
    a, b = float(xs[max(i - 1, 0)]), float(xs[i + 1])

    # golden section while value comparisons are reliable
    it = 0
    width = 1.0e-5 * max(b, 1.0e-3)
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > width and it < policy.max_iter:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
        it += 1

    # bisection on the sign of the derivative
    da, db = df(a), df(b)
    if a == lo and da <= 0.0:
        raise SolverFailure(f"{what}: maximum at the left end of the interval")
    if not (da > 0.0 > db):
        raise SolverFailure(f"{what}: derivative does not change sign on [{a!r}, {b!r}]")
    while b - a > policy.location_tol and it < policy.max_iter:
        m = 0.5 * (a + b)
        dm = df(m)
        if dm > 0.0:
            a, da = m, dm
        else:
            b, db = m, dm
        it += 1

    # a final secant step on the derivative
    x = a - da * (b - a) / (db - da)
    if not a < x < b:
        x = 0.5 * (a + b)

    converged = b - a < policy.location_tol
    return x, f(x), (a, b), it, converged


def _scan_radius(nu: float) -> float:
    # radius where the asymptotic exponent Y reaches 30; the envelope there
    # is far below any maximum
    return (30.0 / (1.0 - nu)) ** (1.0 - nu) / nu**nu


# }}}


# {{{ maximum locations


def _interior_order(nu: FractionalOrder | float, lower_open: bool) -> float:
    order = as_order(nu)
    ok = (0.5 < order.nu < 1.0) if lower_open else (0.5 <= order.nu < 1.0)
    if not ok:
        interval = "(1/2, 1)" if lower_open else "[1/2, 1)"
        raise DomainError(f"an interior maximum requires nu in {interval}, got {order.nu!r}")
    return order.nu


@lru_cache(maxsize=256)
def _location_cauchy(nu: float, policy: SolverPolicy, series: SeriesPolicy | None) -> ExtremumRecord:
    x, fx, bracket, it, ok = _maximize(
        lambda r: mainardi_m(nu, r, series).value,
        lambda r: mainardi_m_derivative(nu, r, series).value,
        0.0,
        _scan_radius(nu),
        policy,
        f"c_nu at nu={nu!r}",
    )
    return ExtremumRecord(FractionalOrder(nu), x, fx, bracket, it, ok)


@lru_cache(maxsize=256)
def _location_signaling(nu: float, policy: SolverPolicy, series: SeriesPolicy | None) -> ExtremumRecord:
    def df(r: float) -> float:
        # F' = nu (M + r M')
        return nu * (mainardi_m(nu, r, series).value + r * mainardi_m_derivative(nu, r, series).value)

    x, fx, bracket, it, ok = _maximize(
        lambda r: nu * r * mainardi_m(nu, r, series).value,
        df,
        0.0,
        _scan_radius(nu),
        policy,
        f"d_nu at nu={nu!r}",
    )
    return ExtremumRecord(FractionalOrder(nu), x, fx, bracket, it, ok)


def max_location_cauchy(
    nu: FractionalOrder | float,
    policy: SolverPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> ExtremumRecord:
    """Location :math:`c_\\nu` and value :math:`M_\\nu(c_\\nu)` of the maximum
    of :math:`M_\\nu` for :math:`1/2 < \\nu < 1`."""
    return _location_cauchy(_interior_order(nu, True), policy or DEFAULT_SOLVER, series)


def max_location_cauchy_with_limits(
    nu: FractionalOrder | float,
    policy: SolverPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """:math:`c_\\nu` on the closed interval: the diffusion limit has its
    maximum at the origin (:math:`c_{1/2} = 0`) and the wave limit moves with
    unit speed (:math:`c_1 = 1`)."""
    order = as_order(nu)
    if order.nu == 0.5:
        return 0.0
    if order.nu == 1.0:
        return 1.0
    return max_location_cauchy(order, policy, series).location


def max_location_signaling(
    nu: FractionalOrder | float,
    policy: SolverPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> ExtremumRecord:
    """Location :math:`d_\\nu` and value :math:`n_\\nu = F_\\nu(d_\\nu)` of the
    maximum of :math:`F_\\nu` for :math:`1/2 \\le \\nu < 1`."""
    return _location_signaling(_interior_order(nu, False), policy or DEFAULT_SOLVER, series)


def argmax_green(
    problem: Problem | str,
    t: float,
    nu: FractionalOrder | float,
    policy: SolverPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> ExtremumRecord:
    """Maximize :math:`G(\\cdot, t; \\nu)` directly in :math:`x > 0`, without
    using the similarity reduction of the location."""
    problem = Problem(problem)
    t = _check_time(t)
    nu = _interior_order(nu, problem is Problem.CAUCHY)
    policy = policy or DEFAULT_SOLVER
    scale = t**nu

    if problem is Problem.CAUCHY:
        def f(x: float) -> float:
            return mainardi_m(nu, x / scale, series).value / (2.0 * scale)

        def df(x: float) -> float:
            return mainardi_m_derivative(nu, x / scale, series).value / (2.0 * scale * scale)
    else:
        def f(x: float) -> float:
            return nu * x * mainardi_m(nu, x / scale, series).value / (scale * t)

        def df(x: float) -> float:
            r = x / scale
            m = mainardi_m(nu, r, series).value
            dm = mainardi_m_derivative(nu, r, series).value
            return nu * (m + r * dm) / (scale * t)

    x, fx, bracket, it, ok = _maximize(f, df, 0.0, _scan_radius(nu) * scale, policy, "argmax")
    return ExtremumRecord(FractionalOrder(nu), x, fx, bracket, it, ok)


# }}}


# {{{ maximum values


def max_value_cauchy(
    t: float,
    nu: FractionalOrder | float,
    policy: SolverPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """Peak height :math:`m_\\nu t^{-\\nu}` of the Cauchy Green function."""
    t = _check_time(t)
    rec = max_location_cauchy(nu, policy, series)
    return 0.5 * rec.value * t ** (-rec.nu.nu)


def max_value_signaling(
    t: float,
    nu: FractionalOrder | float,
    policy: SolverPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """Peak height :math:`n_\\nu / t` of the signaling Green function."""
    t = _check_time(t)
    return max_location_signaling(nu, policy, series).value / t


def cauchy_peak_integral(
    nu: FractionalOrder | float,
    c: float,
    quad: QuadPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> QuadResult:
    """:math:`m_\\nu` from the cosine integral of :math:`E_{2\\nu}(-\\tau^2)`,
    with the quadrature error estimate.

    :raises QuadratureFailure: if the oscillatory integral does not converge.
    """
    nu = _interior_order(nu, True)
    if not c > 0:
        raise DomainError(f"maximum location must be positive, got {c!r}")

    def amplitude(tau: np.ndarray) -> np.ndarray:
        return mittag_leffler_array(2.0 * nu, 1.0, -(tau**2), series) / math.pi

    return integrate_oscillatory(amplitude, float(c), TrigKind.COSINE, quad)


def signaling_peak_integral(
    nu: FractionalOrder | float,
    d: float,
    quad: QuadPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> QuadResult:
    """:math:`n_\\nu` from the sine integral of
    :math:`\\tau E_{2\\nu,2\\nu}(-\\tau^2)`, with the quadrature error estimate."""
    nu = _interior_order(nu, False)
    if not d > 0:
        raise DomainError(f"maximum location must be positive, got {d!r}")

    def amplitude(tau: np.ndarray) -> np.ndarray:
        return 2.0 * tau * mittag_leffler_array(2.0 * nu, 2.0 * nu, -(tau**2), series) / math.pi

    return integrate_oscillatory(amplitude, float(d), TrigKind.SINE, quad)


def max_value_cauchy_integral(
    nu: FractionalOrder | float,
    c: float,
    quad: QuadPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """Value of :func:`cauchy_peak_integral`."""
    return cauchy_peak_integral(nu, c, quad, series).value


def max_value_signaling_integral(
    nu: FractionalOrder | float,
    d: float,
    quad: QuadPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """Value of :func:`signaling_peak_integral`."""
    return signaling_peak_integral(nu, d, quad, series).value


# }}}


# {{{ velocities and products


def velocity_cauchy(
    t: float,
    nu: FractionalOrder | float,
    policy: SolverPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """Speed :math:`\\nu c_\\nu t^{\\nu - 1}` of the Cauchy peak."""
    t = _check_time(t)
    order = as_order(nu)
    c = max_location_cauchy_with_limits(order, policy, series)
    return order.nu * c * t ** (order.nu - 1.0)


def velocity_signaling(
    t: float,
    nu: FractionalOrder | float,
    policy: SolverPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """Speed :math:`\\nu d_\\nu t^{\\nu - 1}` of the signaling peak."""
    t = _check_time(t)
    rec = max_location_signaling(nu, policy, series)
    return rec.nu.nu * rec.location * t ** (rec.nu.nu - 1.0)


def product_cauchy(
    nu: FractionalOrder | float,
    policy: SolverPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """Time-independent product :math:`c_\\nu m_\\nu` of peak location and
    height."""
    rec = max_location_cauchy(nu, policy, series)
    return rec.location * 0.5 * rec.value


def product_signaling(
    t: float,
    nu: FractionalOrder | float,
    policy: SolverPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """Product :math:`d_\\nu n_\\nu t^{\\nu - 1}` of peak location and height."""
    t = _check_time(t)
    rec = max_location_signaling(nu, policy, series)
    return rec.location * rec.value * t ** (rec.nu.nu - 1.0)


# }}}
