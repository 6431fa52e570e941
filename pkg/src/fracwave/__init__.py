"""Green functions of the time-fractional diffusion-wave equation for
orders :math:`1 \\le \\beta = 2\\nu \\le 2`."""

from __future__ import annotations

from fracwave.errors import (
    ConvergenceError,
    DegenerateOrder,
    DomainError,
    FracwaveError,
    PoleError,
    PolicyExhausted,
    QuadratureFailure,
    SolverFailure,
    TruncationFailure,
)
from fracwave.extrema import (
    ExtremumRecord,
    SolverPolicy,
    argmax_green,
    cauchy_peak_integral,
    max_location_cauchy,
    max_location_cauchy_with_limits,
    max_location_signaling,
    max_value_cauchy,
    max_value_cauchy_integral,
    max_value_signaling,
    max_value_signaling_integral,
    product_cauchy,
    product_signaling,
    signaling_peak_integral,
    velocity_cauchy,
    velocity_signaling,
)
from fracwave.green_functions import (
    GreenSample,
    Problem,
    SpaceTimePoint,
    green_cauchy,
    green_signaling,
    profile,
    similarity,
)
from fracwave.moments import (
    MedianRecord,
    MomentRecord,
    gravity_cauchy,
    gravity_signaling,
    gravity_velocity_cauchy,
    gravity_velocity_signaling,
    median_cauchy,
    median_coefficient,
    median_signaling,
    mellin_moment,
    mellin_moment_quadrature,
)
from fracwave.quadrature import (
    QuadPolicy,
    QuadResult,
    TrigKind,
    integrate,
    integrate_oscillatory,
    integrate_semi_infinite,
)
from fracwave.special_functions import (
    EvalResult,
    FractionalOrder,
    Method,
    SeriesPolicy,
    gamma,
    mainardi_m,
    mainardi_m_asymptotic,
    mainardi_m_cdf,
    mainardi_m_derivative,
    mainardi_m_sf,
    mittag_leffler,
    reciprocal_gamma,
    verify_wright_f,
    wright_f,
)
from fracwave.tables import FigureId, FigureTable

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DegenerateOrder",
    "DomainError",
    "EvalResult",
    "ExtremumRecord",
    "FigureId",
    "FigureTable",
    "FracwaveError",
    "FractionalOrder",
    "GreenSample",
    "MedianRecord",
    "Method",
    "MomentRecord",
    "PoleError",
    "PolicyExhausted",
    "Problem",
    "QuadPolicy",
    "QuadResult",
    "QuadratureFailure",
    "SeriesPolicy",
    "SolverFailure",
    "SolverPolicy",
    "SpaceTimePoint",
    "TrigKind",
    "TruncationFailure",
    "argmax_green",
    "cauchy_peak_integral",
    "gamma",
    "gravity_cauchy",
    "gravity_signaling",
    "gravity_velocity_cauchy",
    "gravity_velocity_signaling",
    "green_cauchy",
    "green_signaling",
    "integrate",
    "integrate_oscillatory",
    "integrate_semi_infinite",
    "mainardi_m",
    "mainardi_m_asymptotic",
    "mainardi_m_cdf",
    "mainardi_m_derivative",
    "mainardi_m_sf",
    "max_location_cauchy",
    "max_location_cauchy_with_limits",
    "max_location_signaling",
    "max_value_cauchy",
    "max_value_cauchy_integral",
    "max_value_signaling",
    "max_value_signaling_integral",
    "median_cauchy",
    "median_coefficient",
    "median_signaling",
    "mellin_moment",
    "mellin_moment_quadrature",
    "mittag_leffler",
    "product_cauchy",
    "product_signaling",
    "profile",
    "reciprocal_gamma",
    "signaling_peak_integral",
    "similarity",
    "velocity_cauchy",
    "velocity_signaling",
    "verify_wright_f",
    "wright_f",
]
