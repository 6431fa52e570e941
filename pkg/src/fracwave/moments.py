r"""Centers of gravity, their velocities and medians of the Green functions.

All moments follow from the Mellin transform of the Mainardi function,

.. math::

    \int_0^\infty u^{s-1} M_\nu(u)\, du = \frac{\Gamma(s)}{\Gamma(1 - \nu + \nu s)},
    \qquad s > 0.

The center of gravity of :math:`G_c(\cdot, t)` on :math:`x > 0` is
:math:`t^\nu / \Gamma(1 + \nu)`, that of :math:`G_s(\cdot, t)` is
:math:`\Gamma(\nu) t^\nu / \Gamma(2\nu)`. The median coefficient
:math:`m_c(\nu)` solves :math:`\int_0^{m_c} M_\nu(u)\, du = 1/2`; the
signaling median time at position :math:`x` is :math:`m_s x^{1/\nu}` with
:math:`m_s = m_c^{-1/\nu}`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from fracwave.errors import DegenerateOrder, DomainError, SolverFailure
from fracwave.extrema import DEFAULT_SOLVER, SolverPolicy
from fracwave.green_functions import _check_time
from fracwave.quadrature import (
    QuadPolicy,
    QuadResult,
    integrate,
    integrate_semi_infinite,
)
from fracwave.special_functions import (
    FractionalOrder,
    SeriesPolicy,
    _pointwise_order,
    as_order,
    gamma,
    mainardi_m_array,
    mainardi_m_cdf,
    mainardi_tail_bound,
)

#: tolerances of the quadrature oracles in this module
ORACLE_QUAD = QuadPolicy(abs_tol=1.0e-12, rel_tol=1.0e-12)

# {{{ Mellin moments


@dataclass(frozen=True)
class MomentRecord:
    nu: FractionalOrder
    s: float
    closed_form: float
    oracle: float
    abs_discrepancy: float


def _check_mellin_order(s: float) -> float:
    s = float(s)
    if not (s > 0 and math.isfinite(s)):
        raise DomainError(f"Mellin order s must be positive, got {s!r}")
    return s


def mellin_moment(nu: FractionalOrder | float, s: float) -> float:
    """:math:`\\Gamma(s) / \\Gamma(1 - \\nu + \\nu s)`."""
    nu = _pointwise_order(nu)
    s = _check_mellin_order(s)
    return gamma(s) / gamma(1.0 - nu + nu * s)


def mellin_moment_quadrature(
    nu: FractionalOrder | float,
    s: float,
    quad: QuadPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> QuadResult:
    """:math:`\\int_0^\\infty u^{s-1} M_\\nu(u)\\, du` by adaptive quadrature,
    truncated where the asymptotic envelope bounds the tail."""
    nu = _pointwise_order(nu)
    s = _check_mellin_order(s)

    def f(u: np.ndarray) -> np.ndarray:
        return u ** (s - 1.0) * mainardi_m_array(nu, u, series)

    return integrate_semi_infinite(
        f, lambda t: mainardi_tail_bound(nu, t, s), quad or ORACLE_QUAD
    )


def mellin_record(
    nu: FractionalOrder | float,
    s: float,
    quad: QuadPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> MomentRecord:
    closed = mellin_moment(nu, s)
    oracle = mellin_moment_quadrature(nu, s, quad, series).value
    return MomentRecord(as_order(nu), float(s), closed, oracle, abs(closed - oracle))


# }}}


# {{{ centers of gravity


def gravity_cauchy_coefficient(nu: FractionalOrder | float) -> float:
    """:math:`g_c(\\nu) = 1/\\Gamma(1 + \\nu)`."""
    return 1.0 / gamma(1.0 + as_order(nu).nu)


def gravity_signaling_coefficient(nu: FractionalOrder | float) -> float:
    """:math:`g_s(\\nu) = \\Gamma(\\nu)/\\Gamma(2\\nu)`.

    The duplication formula gives the equivalent form
    :math:`\\sqrt{\\pi}\\, 2^{1 - 2\\nu} / \\Gamma(\\nu + 1/2)`; both are
    evaluated and required to agree.
    """
    nu = as_order(nu).nu
    direct = gamma(nu) / gamma(2.0 * nu)
    duplicated = math.sqrt(math.pi) * 2.0 ** (1.0 - 2.0 * nu) / gamma(nu + 0.5)
    if not math.isclose(direct, duplicated, rel_tol=1.0e-13):
        raise ArithmeticError(
            f"gamma duplication check failed at nu={nu!r}: {direct!r} != {duplicated!r}"
        )
    return direct


def gravity_cauchy(t: float, nu: FractionalOrder | float) -> float:
    """Center of gravity :math:`t^\\nu / \\Gamma(1 + \\nu)` of the Cauchy Green
    function on :math:`x > 0`."""
    t = _check_time(t)
    return gravity_cauchy_coefficient(nu) * t ** as_order(nu).nu


def gravity_signaling(t: float, nu: FractionalOrder | float) -> float:
    """Center of gravity :math:`\\Gamma(\\nu) t^\\nu / \\Gamma(2\\nu)` of the
    signaling Green function in :math:`x`."""
    t = _check_time(t)
    return gravity_signaling_coefficient(nu) * t ** as_order(nu).nu


def gravity_velocity_cauchy(t: float, nu: FractionalOrder | float) -> float:
    """:math:`t^{\\nu - 1} / \\Gamma(\\nu)`."""
    t = _check_time(t)
    nu = as_order(nu).nu
    return t ** (nu - 1.0) / gamma(nu)


def gravity_velocity_signaling(t: float, nu: FractionalOrder | float) -> float:
    """:math:`\\sqrt{\\pi}\\, 2^{1 - 2\\nu} \\nu\\, t^{\\nu - 1} / \\Gamma(\\nu + 1/2)`."""
    t = _check_time(t)
    nu = as_order(nu).nu
    return math.sqrt(math.pi) * 2.0 ** (1.0 - 2.0 * nu) * nu * t ** (nu - 1.0) / gamma(nu + 0.5)


def _green_moment(
    nu: float,
    t: float,
    power: int,
    quad: QuadPolicy | None,
    series: SeriesPolicy | None,
) -> float:
    # int_0^inf x^power M(x / t^nu) dx, integrated in x
    scale = t**nu

    def f(x: np.ndarray) -> np.ndarray:
        return x**power * mainardi_m_array(nu, x / scale, series)

    def tail(x: float) -> float:
        return scale ** (power + 1) * mainardi_tail_bound(nu, x / scale, power + 1.0)

    return integrate_semi_infinite(f, tail, quad or ORACLE_QUAD, initial=scale).value


def gravity_cauchy_quadrature(
    t: float,
    nu: FractionalOrder | float,
    quad: QuadPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """:math:`\\int_0^\\infty x G_c\\, dx / \\int_0^\\infty G_c\\, dx` by
    quadrature."""
    t = _check_time(t)
    nu = _pointwise_order(nu)
    return _green_moment(nu, t, 1, quad, series) / _green_moment(nu, t, 0, quad, series)


def gravity_signaling_quadrature(
    t: float,
    nu: FractionalOrder | float,
    quad: QuadPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """:math:`\\int_0^\\infty x G_s\\, dx / \\int_0^\\infty G_s\\, dx` by
    quadrature; :math:`G_s \\propto x M_\\nu(x/t^\\nu)`."""
    t = _check_time(t)
    nu = _pointwise_order(nu)
    return _green_moment(nu, t, 2, quad, series) / _green_moment(nu, t, 1, quad, series)


def signaling_mass(t: float, nu: FractionalOrder | float) -> float:
    """:math:`\\int_0^\\infty G_s(x, t)\\, dx = \\nu t^{\\nu - 1} / \\Gamma(1 + \\nu)`."""
    t = _check_time(t)
    nu = as_order(nu).nu
    return nu * t ** (nu - 1.0) / gamma(1.0 + nu)


# }}}


# {{{ medians


@dataclass(frozen=True)
class MedianRecord:
    """Median coefficients; *residual* is :math:`C(m_c)/2 - 1/4`."""

    nu: FractionalOrder
    m_c: float
    m_s: float
    residual: float
    iterations: int = 0


#: limit of the median coefficient at nu = 1, where M_1 is concentrated at 1
MEDIAN_WAVE_LIMIT = 1.0


@lru_cache(maxsize=256)
def _median(nu: float, policy: SolverPolicy, series: SeriesPolicy | None) -> MedianRecord:
    def g(x: float) -> float:
        return mainardi_m_cdf(nu, x, series).value - 0.5

    # bracket: the tail bound guarantees C(hi) > 0.99
    lo, hi = 0.0, 1.0
    ghi = g(hi)
    while mainardi_tail_bound(nu, hi) > 0.01 or ghi <= 0.0:
        if ghi <= 0.0:
            lo = hi
        hi *= 2.0
        ghi = g(hi)
        if hi > 1.0e6:
            raise SolverFailure(f"median bracket not found for nu={nu!r}")

    glo = g(lo)
    it = 0
    while hi - lo > 1.0e-12 * max(1.0, hi) and it < policy.max_iter:
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm < 0.0:
            lo, glo = mid, gm
        else:
            hi, ghi = mid, gm
        it += 1
    if it >= policy.max_iter:
        raise SolverFailure(f"median bisection did not converge for nu={nu!r}")

    x = lo - glo * (hi - lo) / (ghi - glo) if ghi != glo else 0.5 * (lo + hi)
    if not lo <= x <= hi:
        x = 0.5 * (lo + hi)
    residual = 0.5 * g(x)
    if abs(residual) > max(policy.value_tol, 1.0e-11):
        raise SolverFailure(f"median residual {residual:.3e} too large for nu={nu!r}")

    return MedianRecord(FractionalOrder(nu), x, x ** (-1.0 / nu), residual, it)


def median_coefficient(
    nu: FractionalOrder | float,
    policy: SolverPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> MedianRecord:
    """Solve :math:`\\int_0^{m_c} M_\\nu(u)\\, du = 1/2` by bisection with a
    final secant step; :math:`m_s = m_c^{-1/\\nu}`.

    :raises DegenerateOrder: at :math:`\\nu = 1`, where the integral is a step
        (see :data:`MEDIAN_WAVE_LIMIT`).
    """
    order = as_order(nu)
    if order.nu == 1.0:
        raise DegenerateOrder("the median coefficient is the limit MEDIAN_WAVE_LIMIT at nu = 1")
    return _median(order.nu, policy or DEFAULT_SOLVER, series)


def median_cauchy(
    t: float,
    nu: FractionalOrder | float,
    policy: SolverPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """Median :math:`m_c(\\nu) t^\\nu` of :math:`G_c(\\cdot, t)` on :math:`x > 0`."""
    t = _check_time(t)
    rec = median_coefficient(nu, policy, series)
    return rec.m_c * t**rec.nu.nu


def median_signaling(
    x: float,
    nu: FractionalOrder | float,
    policy: SolverPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """Time :math:`m_s(\\nu) x^{1/\\nu}` by which half of the signal has passed
    position :math:`x > 0`."""
    x = float(x)
    if not (x > 0 and math.isfinite(x)):
        raise DomainError(f"position must be positive, got x = {x!r}")
    rec = median_coefficient(nu, policy, series)
    return rec.m_s * x ** (1.0 / rec.nu.nu)


def half_mass_cauchy(
    x: float,
    t: float,
    nu: FractionalOrder | float,
    quad: QuadPolicy | None = None,
    series: SeriesPolicy | None = None,
) -> float:
    """:math:`\\int_0^x G_c(y, t)\\, dy` by quadrature of the Green function."""
    t = _check_time(t)
    nu = _pointwise_order(nu)
    scale = t**nu

    def f(y: np.ndarray) -> np.ndarray:
        return mainardi_m_array(nu, y / scale, series) / (2.0 * scale)

    return integrate(f, 0.0, float(x), quad or ORACLE_QUAD).value


# }}}
