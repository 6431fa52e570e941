"""Compare three measures of where the Cauchy kernel sits: the maximum, the
median and the center of gravity.

Run with ``python3 demos/medians_and_gravity.py``.
"""

from __future__ import annotations

import logging

from fracwave import (
    gravity_cauchy,
    max_location_cauchy_with_limits,
    median_cauchy,
    mellin_moment,
    mellin_moment_quadrature,
)
from fracwave.moments import (
    MEDIAN_WAVE_LIMIT,
    gravity_cauchy_coefficient,
    median_coefficient,
)

logging.basicConfig(level=logging.INFO, format="%(message)s")
log = logging.getLogger("medians")

# {{{ coefficients of t^nu

log.info("%6s %10s %10s %10s", "nu", "c_nu", "m_c", "g_c")
for nu in (0.5, 0.6, 0.7, 0.8, 0.9, 0.95):
    log.info("%6.2f %10.6f %10.6f %10.6f", nu, max_location_cauchy_with_limits(nu),
             median_coefficient(nu).m_c, gravity_cauchy_coefficient(nu))
log.info("%6.2f %10.6f %10.6f %10.6f", 1.0, 1.0, MEDIAN_WAVE_LIMIT, gravity_cauchy_coefficient(1.0))

# }}}

# {{{ at a fixed time

nu, t = 0.7, 3.0
log.info("nu = %.1f, t = %.1f: median %.6f, center of gravity %.6f",
         nu, t, median_cauchy(t, nu), gravity_cauchy(t, nu))

# }}}

# {{{ closed-form moments against quadrature

for s in (1.0, 2.0, 3.0):
    q = mellin_moment_quadrature(nu, s)
    log.info("s = %.0f  closed form %.14f  quadrature %.14f", s, mellin_moment(nu, s), q.value)

# }}}
