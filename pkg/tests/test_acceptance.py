"""Acceptance criteria, each at its stated tolerance.

Every test records a one-line PASS/FAIL summary (see ``conftest.py``) before
asserting, so the summary is printed even when a criterion fails.
"""

from __future__ import annotations

import csv
import io
import math
import shutil
import subprocess
import sys
import time

import jsonschema
import numpy as np
import pytest
from scipy.special import erfinv

from fracwave import (
    Problem,
    argmax_green,
    gravity_cauchy,
    gravity_signaling,
    gravity_velocity_cauchy,
    gravity_velocity_signaling,
    green_cauchy,
    green_signaling,
    mainardi_m_cdf,
    max_location_cauchy,
    max_location_cauchy_with_limits,
    max_location_signaling,
    max_value_cauchy_integral,
    max_value_signaling_integral,
    median_coefficient,
    mellin_moment,
    mellin_moment_quadrature,
    product_cauchy,
    product_signaling,
    velocity_cauchy,
    velocity_signaling,
)
from fracwave.cli import main
from fracwave.figures import FIGURE_IDS, JSON_SCHEMA
from fracwave.moments import gravity_cauchy_coefficient, gravity_signaling_coefficient


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b) if b != 0 else abs(a)


def _central(f, t: float, h: float) -> float:
    return (f(t + h) - f(t - h)) / (2.0 * h)


# {{{ 1. boundary constants


def test_boundary_constants(acceptance):
    start = time.perf_counter()
    c_half = max_location_cauchy_with_limits(0.5)
    c_one = max_location_cauchy_with_limits(1.0)
    d_half = max_location_signaling(0.5).location
    worst = abs(d_half - math.sqrt(2.0))
    for t in (0.25, 0.5, 1.0, 2.0, 7.0):
        worst = max(worst, _rel(velocity_signaling(t, 0.5), (math.sqrt(2.0) / 2.0) / math.sqrt(t)))
    elapsed = time.perf_counter() - start

    passed = c_half == 0.0 and c_one == 1.0 and worst <= 1.0e-12
    acceptance(1, "boundary constants", passed,
               f"c_1/2={c_half}, c_1={c_one}, worst d_1/2 and V_s discrepancy {worst:.2e} "
               f"(tol 1e-12), {elapsed:.3f} s")
    assert c_half == 0.0
    assert c_one == 1.0
    assert worst <= 1.0e-12


# }}}


# {{{ 2. gravity endpoints


def test_gravity_endpoints(acceptance):
    expected = {
        (gravity_cauchy_coefficient, 0.5): 2.0 / math.sqrt(math.pi),
        (gravity_cauchy_coefficient, 1.0): 1.0,
        (gravity_signaling_coefficient, 0.5): math.sqrt(math.pi),
        (gravity_signaling_coefficient, 1.0): 1.0,
    }
    worst = max(abs(f(nu) - value) for (f, nu), value in expected.items())
    # the coefficients also drive the time-dependent centers
    worst = max(worst, abs(gravity_cauchy(1.0, 0.5) - 2.0 / math.sqrt(math.pi)),
                abs(gravity_signaling(1.0, 0.5) - math.sqrt(math.pi)))

    acceptance(2, "gravity endpoints", worst <= 1.0e-10, f"worst {worst:.2e} (tol 1e-10)")
    assert worst <= 1.0e-10


# }}}


# {{{ 3. Mellin moments


def test_mellin_moments(acceptance):
    start = time.perf_counter()
    worst = 0.0
    for nu in (0.55, 0.7, 0.85, 0.95):
        for s in (1.0, 2.0, 3.0):
            q = mellin_moment_quadrature(nu, s).value
            worst = max(worst, abs(q - mellin_moment(nu, s)))
    elapsed = time.perf_counter() - start

    passed = worst <= 1.0e-8 and elapsed < 10.0
    acceptance(3, "Mellin moments", passed,
               f"worst {worst:.2e} (tol 1e-8), {elapsed:.2f} s (limit 10 s)")
    assert worst <= 1.0e-8
    assert elapsed < 10.0


# }}}


# {{{ 4. reciprocity and self-similarity

#: 5 orders x 5 positions x 4 times = 100 fixture points
FIXTURE_NU = (0.5, 0.6, 0.75, 0.9, 0.95)
FIXTURE_X = (0.1, 0.5, 1.0, 2.0, 3.0)
FIXTURE_T = (0.5, 1.0, 2.0, 3.0)


def test_reciprocity_and_self_similarity(acceptance):
    start = time.perf_counter()
    worst_recip = worst_sim = 0.0
    npoints = 0
    for nu in FIXTURE_NU:
        for x in FIXTURE_X:
            for t in FIXTURE_T:
                gc = green_cauchy(x, t, nu).value
                gs = green_signaling(x, t, nu).value
                worst_recip = max(worst_recip, _rel(2.0 * nu * x * gc, t * gs))
                unit = green_cauchy(x * t ** (-nu), 1.0, nu).value
                worst_sim = max(worst_sim, _rel(gc, t ** (-nu) * unit))
                npoints += 1
    elapsed = time.perf_counter() - start

    passed = npoints == 100 and max(worst_recip, worst_sim) <= 1.0e-12 and elapsed < 1.0
    acceptance(4, "reciprocity and self-similarity", passed,
               f"{npoints} points, reciprocity {worst_recip:.2e}, scaling {worst_sim:.2e} "
               f"(tol 1e-12), {elapsed:.2f} s (limit 1 s)")
    assert npoints == 100
    assert worst_recip <= 1.0e-12
    assert worst_sim <= 1.0e-12
    assert elapsed < 1.0


# }}}


# {{{ 5. representation agreement


def test_representation_agreement(acceptance):
    start = time.perf_counter()
    worst = 0.0
    for nu in (0.6, 0.75, 0.9):
        rec = max_location_cauchy(nu)
        m = max_value_cauchy_integral(nu, rec.location)
        worst = max(worst, abs(m - 0.5 * rec.value))

        rec = max_location_signaling(nu)
        n = max_value_signaling_integral(nu, rec.location)
        worst = max(worst, abs(n - rec.value))
    elapsed = time.perf_counter() - start

    passed = worst <= 1.0e-6 and elapsed < 30.0
    acceptance(5, "representation agreement", passed,
               f"worst {worst:.2e} (tol 1e-6), {elapsed:.2f} s (limit 30 s)")
    assert worst <= 1.0e-6
    assert elapsed < 30.0


# }}}


# {{{ 6. hyperbola constancy


def test_hyperbola_constancy(acceptance):
    start = time.perf_counter()
    spread = worst_signaling = 0.0
    for nu in (0.55, 0.6, 0.75, 0.9, 0.95):
        products = []
        for t in (0.5, 1.0, 2.0, 10.0):
            peak = argmax_green(Problem.CAUCHY, t, nu)
            products.append(peak.location * peak.value)

            peak = argmax_green(Problem.SIGNALING, t, nu)
            expected = product_signaling(t, nu)
            worst_signaling = max(worst_signaling, abs(peak.location * peak.value - expected))
        spread = max(spread, max(products) - min(products),
                     max(abs(p - product_cauchy(nu)) for p in products))
    elapsed = time.perf_counter() - start

    passed = spread <= 1.0e-10 and worst_signaling <= 1.0e-10 and elapsed < 5.0
    acceptance(6, "hyperbola constancy", passed,
               f"Cauchy spread {spread:.2e}, signaling {worst_signaling:.2e} (tol 1e-10), "
               f"{elapsed:.2f} s (limit 5 s)")
    assert spread <= 1.0e-10
    assert worst_signaling <= 1.0e-10
    assert elapsed < 5.0


# }}}


# {{{ 7. velocities


def test_velocities_against_finite_differences(acceptance):
    start = time.perf_counter()
    worst = 0.0
    for nu in (0.5, 0.6, 0.75, 0.9):
        for t in (0.5, 2.0):
            h = 1.0e-3 * t
            problems = [Problem.SIGNALING] if nu == 0.5 else [Problem.CAUCHY, Problem.SIGNALING]
            for problem in problems:
                fd = _central(lambda s: argmax_green(problem, s, nu).location, t, h)
                v = (velocity_cauchy if problem is Problem.CAUCHY else velocity_signaling)(t, nu)
                worst = max(worst, _rel(v, fd))

            h = 1.0e-4 * t
            worst = max(worst,
                        _rel(gravity_velocity_cauchy(t, nu),
                             _central(lambda s: gravity_cauchy(s, nu), t, h)),
                        _rel(gravity_velocity_signaling(t, nu),
                             _central(lambda s: gravity_signaling(s, nu), t, h)))
    elapsed = time.perf_counter() - start

    passed = worst <= 1.0e-6 and elapsed < 30.0
    acceptance(7, "velocities vs finite differences", passed,
               f"worst relative {worst:.2e} (tol 1e-6), {elapsed:.2f} s (limit 30 s)")
    assert worst <= 1.0e-6
    assert elapsed < 30.0


# }}}


# {{{ 8. medians


def test_median_equations(acceptance):
    start = time.perf_counter()
    worst_cdf = worst_coherence = 0.0
    for nu in (0.5, 0.55, 0.625, 0.75, 0.875, 0.95):
        rec = median_coefficient(nu)
        worst_cdf = max(worst_cdf, abs(mainardi_m_cdf(nu, rec.m_c).value - 0.5))
        worst_coherence = max(worst_coherence, abs(rec.m_s * rec.m_c ** (1.0 / nu) - 1.0))
    half = abs(median_coefficient(0.5).m_c - 2.0 * erfinv(0.5))
    elapsed = time.perf_counter() - start

    passed = (worst_cdf <= 1.0e-10 and half <= 1.0e-8 and worst_coherence <= 1.0e-12
              and elapsed < 10.0)
    acceptance(8, "median equations", passed,
               f"CDF residual {worst_cdf:.2e} (tol 1e-10), m_c(1/2) {half:.2e} (tol 1e-8), "
               f"coherence {worst_coherence:.2e} (tol 1e-12), {elapsed:.2f} s (limit 10 s)")
    assert worst_cdf <= 1.0e-10
    assert half <= 1.0e-8
    assert worst_coherence <= 1.0e-12
    assert elapsed < 10.0


# }}}


# {{{ 9. diffusion limit


def test_half_order_closed_forms(acceptance):
    start = time.perf_counter()
    worst = 0.0
    for x in np.linspace(0.06, 6.0, 100):
        for t in (0.5, 1.0, 2.0):
            gauss = math.exp(-x * x / (4.0 * t))
            heat = gauss / (2.0 * math.sqrt(math.pi * t))
            levy = x * gauss / (2.0 * math.sqrt(math.pi) * t**1.5)
            worst = max(worst, _rel(green_cauchy(x, t, 0.5).value, heat),
                        _rel(green_signaling(x, t, 0.5).value, levy))
    elapsed = time.perf_counter() - start

    passed = worst <= 1.0e-12 and elapsed < 1.0
    acceptance(9, "nu = 1/2 closed forms", passed,
               f"worst relative {worst:.2e} (tol 1e-12), {elapsed:.2f} s (limit 1 s)")
    assert worst <= 1.0e-12
    assert elapsed < 1.0


# }}}


# {{{ 10. monotonicity


def test_monotonicity(acceptance):
    start = time.perf_counter()
    grid = np.linspace(0.5, 1.0, 21)
    g_c = np.array([gravity_cauchy_coefficient(nu) for nu in grid])
    g_s = np.array([gravity_signaling_coefficient(nu) for nu in grid])

    # m_nu is unbounded as nu -> 1, so the product grid stops short of it
    pgrid = np.linspace(0.5, 0.99, 21)
    products = np.array([0.0] + [product_cauchy(nu) for nu in pgrid[1:]])
    elapsed = time.perf_counter() - start

    ok_c = bool(np.all(np.diff(g_c) < 0))
    ok_s = bool(np.all(np.diff(g_s) < 0))
    ok_p = bool(np.all(np.diff(products) > 0))
    passed = ok_c and ok_s and ok_p and elapsed < 60.0
    acceptance(10, "monotonicity", passed,
               f"g_c decreasing {ok_c}, g_s decreasing {ok_s}, c*m increasing {ok_p}, "
               f"{elapsed:.2f} s (limit 60 s)")
    assert ok_c and ok_s and ok_p
    assert elapsed < 60.0


# }}}


# {{{ 11. figure data


def _fracwave_command() -> list[str]:
    exe = shutil.which("fracwave")
    return [exe] if exe else [sys.executable, "-m", "fracwave.cli"]


def _check_csv(text: str) -> None:
    rows = list(csv.reader(io.StringIO(text, newline="")))
    header, body = rows[0], rows[1:]
    assert body, "empty table"
    for name in header:
        assert name.endswith("]") and " [" in name, f"header without unit: {name!r}"
    for row in body:
        assert len(row) == len(header)
        for cell in row:
            float(cell)


@pytest.mark.slow
def test_figure_regeneration(acceptance):
    start = time.perf_counter()
    problems = []
    for fid in FIGURE_IDS:
        first = subprocess.run([*_fracwave_command(), "figure", fid, "--format", "csv"],
                               capture_output=True, check=False)
        if first.returncode != 0:
            problems.append(f"{fid}: exit {first.returncode}")
            continue
        out = io.StringIO(newline="")
        rc = main(["figure", fid, "--format", "csv"], stdout=out)
        if rc != 0 or out.getvalue().encode() != first.stdout:
            problems.append(f"{fid}: CSV output not reproducible")
        try:
            _check_csv(first.stdout.decode())
        except (AssertionError, ValueError) as exc:
            problems.append(f"{fid}: malformed CSV ({exc})")

        out = io.StringIO()
        rc = main(["figure", fid, "--format", "json"], stdout=out)
        try:
            import json

            jsonschema.validate(json.loads(out.getvalue()), JSON_SCHEMA)
        except jsonschema.ValidationError as exc:
            problems.append(f"{fid}: JSON schema violation ({exc.message})")
        if rc != 0:
            problems.append(f"{fid}: JSON exit {rc}")

    verify = subprocess.run([*_fracwave_command(), "verify"], capture_output=True, check=False)
    if verify.returncode != 0:
        problems.append(f"verify: exit {verify.returncode}")
    elapsed = time.perf_counter() - start

    passed = not problems and elapsed < 120.0
    detail = "; ".join(problems) if problems else f"{len(FIGURE_IDS)} figures deterministic and valid"
    acceptance(11, "figure data and verify", passed,
               f"{detail}, verify exit {verify.returncode}, {elapsed:.1f} s (limit 120 s)")
    assert not problems
    assert elapsed < 120.0


# }}}
