"""Locate the maxima of the Green functions and follow them in time.

The maximum of the Cauchy kernel sits at ``c_nu t^nu`` and travels with speed
``nu c_nu t^(nu - 1)``; the signaling maximum behaves the same way with ``d_nu``.

Run with ``python3 demos/peaks_and_velocities.py``.
"""

from __future__ import annotations

import logging

from fracwave import (
    Problem,
    argmax_green,
    cauchy_peak_integral,
    max_location_cauchy_with_limits,
    max_location_signaling,
    product_cauchy,
    velocity_cauchy,
    velocity_signaling,
)

logging.basicConfig(level=logging.INFO, format="%(message)s")
log = logging.getLogger("peaks")

# {{{ similarity coefficients

log.info("%6s %10s %10s %12s", "nu", "c_nu", "d_nu", "c_nu m_nu")
for nu in (0.5, 0.6, 0.75, 0.9, 0.95, 1.0):
    c = max_location_cauchy_with_limits(nu)
    d = max_location_signaling(nu).location if nu < 1.0 else 1.0
    prod = product_cauchy(nu) if 0.5 < nu < 1.0 else float("nan")
    log.info("%6.2f %10.6f %10.6f %12.6f", nu, c, d, prod)

# }}}

# {{{ direct search in x agrees with the similarity solution

nu = 0.75
for t in (0.5, 2.0, 8.0):
    rec = argmax_green(Problem.CAUCHY, t, nu)
    log.info("t = %3.1f  x* = %.10f  V_c = %.6f  V_s = %.6f",
             t, rec.location, velocity_cauchy(t, nu), velocity_signaling(t, nu))

# }}}

# {{{ an independent route to the peak height

c = max_location_cauchy_with_limits(nu)
res = cauchy_peak_integral(nu, c)
log.info("cosine-integral peak height %.12f +- %.1e", res.value, res.err_estimate)

# }}}
