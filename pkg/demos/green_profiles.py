"""Evaluate the Cauchy and signaling Green functions on a grid and check the
two identities that tie them together.

Run with ``python3 demos/green_profiles.py``.
"""

from __future__ import annotations

import logging

import numpy as np

from fracwave import Problem, green_cauchy, green_signaling, profile

logging.basicConfig(level=logging.INFO, format="%(message)s")
log = logging.getLogger("green_profiles")

# {{{ profiles at fixed time

t = 1.0
xs = np.linspace(0.0, 4.0, 9)
for nu in (0.5, 0.75, 0.95):
    tab = profile(Problem.CAUCHY, t, nu, xs)
    log.info("nu = %.2f  G_c(x, 1): %s", nu, np.array2string(tab["G_c"], precision=4))

# the signaling profile excludes x = 0; that row is flagged, not dropped
tab = profile(Problem.SIGNALING, t, 0.75, xs)
log.info("signaling flags: %s", tab["flag"])

# }}}

# {{{ identities

nu, x = 0.8, 1.3
for t in (0.5, 2.0, 8.0):
    gc = green_cauchy(x, t, nu)
    gs = green_signaling(x, t, nu)
    # x G_c relates to t G_s through the factor 2 nu
    log.info("t = %4.1f  2 nu x G_c - t G_s = %+.2e  (method %s)",
             t, 2 * nu * x * gc.value - t * gs.value, gc.method.value)

lam = 3.0
a = green_cauchy(lam**nu * x, lam * 1.0, nu).value
b = lam ** (-nu) * green_cauchy(x, 1.0, nu).value
log.info("self-similarity defect: %.2e", abs(a - b) / b)

# }}}
