"""Oracle suite behind ``fracwave verify``.

Every check compares a library result against an independent route
(quadrature, closed form, finite differences or a different representation)
and reports the discrepancy next to its threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

from fracwave.extrema import (
    argmax_green,
    max_location_cauchy,
    max_location_signaling,
    max_value_cauchy_integral,
    max_value_signaling_integral,
    velocity_cauchy,
    velocity_signaling,
)
from fracwave.figures import RunConfig
from fracwave.green_functions import Problem, green_cauchy, green_signaling
from fracwave.moments import (
    _green_moment,
    gravity_cauchy,
    gravity_cauchy_quadrature,
    gravity_signaling,
    gravity_signaling_quadrature,
    gravity_velocity_cauchy,
    gravity_velocity_signaling,
    median_coefficient,
    mellin_moment,
    mellin_moment_quadrature,
    signaling_mass,
)
from fracwave.quadrature import QuadPolicy
from fracwave.special_functions import mainardi_m_cdf, mittag_leffler


@dataclass(frozen=True)
class Check:
    name: str
    nu: float
    discrepancy: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.discrepancy <= self.threshold


VERIFY_NU = (0.5, 0.625, 0.75, 0.875, 0.95)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b) if b != 0 else abs(a)


def _central(f: Callable[[float], float], t: float, h: float) -> float:
    return (f(t + h) - f(t - h)) / (2.0 * h)


def run_checks(config: RunConfig | None = None) -> Iterator[Check]:
    """Yield checks one at a time; numerical failures propagate."""
    config = config or RunConfig()
    series, solver = config.series, config.solver
    quad = QuadPolicy(
        abs_tol=min(config.quad.abs_tol, 1.0e-11),
        rel_tol=min(config.quad.rel_tol, 1.0e-11),
        max_subdivisions=config.quad.max_subdivisions,
        tail_bound_factor=config.quad.tail_bound_factor,
    )
    osc = QuadPolicy(abs_tol=max(config.quad.abs_tol, 1.0e-30) * 10.0,
                     rel_tol=config.quad.rel_tol * 10.0)
    nus = [nu for nu in config.nus(VERIFY_NU) if nu < 1.0]

    for nu in nus:
        # normalization and Mellin moments
        for s in (1.0, 2.0, 3.0):
            q = mellin_moment_quadrature(nu, s, quad, series).value
            yield Check(f"mellin s={s:g}", nu, abs(q - mellin_moment(nu, s)), 1.0e-8)

        # signaling mass at t = 2
        mass = nu * _green_moment(nu, 2.0, 1, quad, series) / 2.0 ** (nu + 1.0)
        yield Check("signaling mass", nu, abs(mass - signaling_mass(2.0, nu)), 1.0e-8)

        # reciprocity and self-similarity
        worst_recip, worst_sim = 0.0, 0.0
        for x in (0.1, 0.7, 1.5, 3.0):
            for t in (0.5, 1.0, 3.0):
                gc = green_cauchy(x, t, nu, series).value
                gs = green_signaling(x, t, nu, series).value
                worst_recip = max(worst_recip, _rel(2.0 * nu * x * gc, t * gs))
                unit = green_cauchy(x * t ** (-nu), 1.0, nu, series).value
                worst_sim = max(worst_sim, _rel(gc, t ** (-nu) * unit))
        yield Check("reciprocity", nu, worst_recip, 1.0e-12)
        yield Check("self-similarity", nu, worst_sim, 1.0e-12)

        # gravity centers against quadrature
        yield Check("gravity cauchy", nu,
                    abs(gravity_cauchy_quadrature(1.0, nu, quad, series) - gravity_cauchy(1.0, nu)), 1.0e-8)
        yield Check("gravity signaling", nu,
                    abs(gravity_signaling_quadrature(1.0, nu, quad, series) - gravity_signaling(1.0, nu)),
                    1.0e-8)

        # gravity velocities against finite differences
        for t in (0.5, 2.0):
            h = 1.0e-4 * t
            fd = _central(lambda s: gravity_cauchy(s, nu), t, h)
            yield Check(f"gravity velocity cauchy t={t:g}", nu,
                        _rel(gravity_velocity_cauchy(t, nu), fd), 1.0e-6)
            fd = _central(lambda s: gravity_signaling(s, nu), t, h)
            yield Check(f"gravity velocity signaling t={t:g}", nu,
                        _rel(gravity_velocity_signaling(t, nu), fd), 1.0e-6)

        # maximum values by two representations
        if nu > 0.5:
            rec = max_location_cauchy(nu, solver, series)
            m = max_value_cauchy_integral(nu, rec.location, osc, series)
            yield Check("m_nu representations", nu, abs(m - 0.5 * rec.value), 1.0e-6)
        rec = max_location_signaling(nu, solver, series)
        n = max_value_signaling_integral(nu, rec.location, osc, series)
        yield Check("n_nu representations", nu, abs(n - rec.value), 1.0e-6)

        # peak velocities against finite differences of argmax sweeps
        t, h = 2.0, 1.0e-3
        problems = [Problem.SIGNALING] if nu == 0.5 else [Problem.CAUCHY, Problem.SIGNALING]
        for problem in problems:
            fd = _central(lambda s: argmax_green(problem, s, nu, solver, series).location, t, h)
            v = (velocity_cauchy if problem is Problem.CAUCHY else velocity_signaling)(t, nu, solver, series)
            yield Check(f"peak velocity {problem.value}", nu, _rel(v, fd), 1.0e-6)

        # medians
        med = median_coefficient(nu, solver, series)
        yield Check("median residual", nu, abs(mainardi_m_cdf(nu, med.m_c, series).value - 0.5), 1.0e-10)
        yield Check("median coherence", nu, abs(med.m_s * med.m_c ** (1.0 / nu) - 1.0), 1.0e-12)

    # Mittag-Leffler identities
    worst = 0.0
    for k in range(0, 41):
        tau = 0.5 * k
        worst = max(worst, abs(mittag_leffler(2.0, 1.0, -tau * tau, series).value - math.cos(tau)))
        if tau > 0:
            sinc = math.sin(tau) / tau
            worst = max(worst, abs(mittag_leffler(2.0, 2.0, -tau * tau, series).value - sinc))
    yield Check("E_2 trigonometric identities", 1.0, worst, 1.0e-10)

    # diffusion limit closed forms
    worst = 0.0
    for x in (0.25, 1.0, 2.5, 6.0):
        for t in (0.5, 1.0, 2.0):
            heat = math.exp(-x * x / (4.0 * t)) / (2.0 * math.sqrt(math.pi * t))
            levy = x * math.exp(-x * x / (4.0 * t)) / (2.0 * math.sqrt(math.pi) * t**1.5)
            worst = max(worst, _rel(green_cauchy(x, t, 0.5, series).value, heat),
                        _rel(green_signaling(x, t, 0.5, series).value, levy))
    yield Check("nu=1/2 closed forms", 0.5, worst, 1.0e-12)
