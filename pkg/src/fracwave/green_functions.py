r"""Fundamental solutions of the time-fractional diffusion-wave equation.

With the similarity variable :math:`r = |x| / t^\nu` the Cauchy and signaling
Green functions reduce to the Mainardi function,

.. math::

    G_c(x, t; \nu) = \frac{1}{2 t^\nu} M_\nu(r),
    \qquad
    G_s(x, t; \nu) = \frac{1}{t} F_\nu(r) = \frac{\nu x}{t^{\nu + 1}} M_\nu(r),

and are linked by the reciprocity relation :math:`2\nu x G_c = t G_s`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from fracwave.errors import ConvergenceError, DomainError
from fracwave.special_functions import (
    EvalResult,
    FractionalOrder,
    Method,
    SeriesPolicy,
    as_order,
    mainardi_m,
)
from fracwave.tables import (
    FLAG_DOMAIN,
    FLAG_NONCONVERGENCE,
    FLAG_OK,
    FigureId,
    FigureTable,
)


class Problem(enum.Enum):
    CAUCHY = "cauchy"
    SIGNALING = "signaling"


@dataclass(frozen=True)
class SpaceTimePoint:
    x: float
    t: float

    def __post_init__(self) -> None:
        _check_time(self.t)
        if not math.isfinite(self.x):
            raise DomainError(f"x must be finite, got {self.x!r}")


@dataclass(frozen=True)
class GreenSample:
    point: SpaceTimePoint
    nu: FractionalOrder
    value: float
    similarity_r: float
    abs_err_estimate: float = 0.0
    method: Method = Method.SERIES

    def __float__(self) -> float:
        return self.value


def _check_time(t: float) -> float:
    t = float(t)
    if not (t > 0 and math.isfinite(t)):
        raise DomainError(f"time must be positive and finite, got t = {t!r}")
    return t


def similarity(x: float, t: float, nu: FractionalOrder | float) -> float:
    """Similarity variable :math:`|x| / t^\\nu`."""
    t = _check_time(t)
    return abs(float(x)) / t ** as_order(nu).nu


def green_cauchy(
    x: float,
    t: float,
    nu: FractionalOrder | float,
    policy: SeriesPolicy | None = None,
) -> GreenSample:
    """Cauchy Green function :math:`G_c(x, t; \\nu) = M_\\nu(|x|/t^\\nu) / (2 t^\\nu)`."""
    order = as_order(nu)
    point = SpaceTimePoint(float(x), float(t))
    scale = point.t**order.nu
    r = abs(point.x) / scale
    m = mainardi_m(order, r, policy)
    return GreenSample(
        point=point,
        nu=order,
        value=m.value / (2.0 * scale),
        similarity_r=r,
        abs_err_estimate=m.abs_err_estimate / (2.0 * scale),
        method=m.method,
    )


def green_signaling(
    x: float,
    t: float,
    nu: FractionalOrder | float,
    policy: SeriesPolicy | None = None,
) -> GreenSample:
    """Signaling Green function :math:`G_s(x, t; \\nu) = F_\\nu(x/t^\\nu) / t`
    for :math:`x > 0`."""
    order = as_order(nu)
    point = SpaceTimePoint(float(x), float(t))
    if not point.x > 0:
        raise DomainError(f"signaling problem requires x > 0, got x = {point.x!r}")
    r = point.x / point.t**order.nu
    m: EvalResult = mainardi_m(order, r, policy)
    factor = order.nu * r / point.t
    return GreenSample(
        point=point,
        nu=order,
        value=factor * m.value,
        similarity_r=r,
        abs_err_estimate=factor * m.abs_err_estimate,
        method=m.method,
    )


def profile(
    problem: Problem | str,
    t: float,
    nu: FractionalOrder | float,
    x_grid: Sequence[float] | np.ndarray,
    policy: SeriesPolicy | None = None,
) -> FigureTable:
    """Tabulate :math:`G(x, t; \\nu)` on *x_grid*.

    Points that fail (domain or convergence errors) are kept as rows with a
    ``nan`` value and a nonzero ``flag``.
    """
    problem = Problem(problem)
    order = as_order(nu)
    t = _check_time(t)
    x = np.asarray(x_grid, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise DomainError("x grid must be a non-empty one-dimensional sequence")

    evaluate = green_cauchy if problem is Problem.CAUCHY else green_signaling
    values = np.full(x.size, np.nan)
    errors = np.full(x.size, np.nan)
    flags = np.zeros(x.size, dtype=int)
    for i, xi in enumerate(x):
        try:
            sample = evaluate(xi, t, order, policy)
        except DomainError:
            flags[i] = FLAG_DOMAIN
            continue
        except ConvergenceError:
            flags[i] = FLAG_NONCONVERGENCE
            continue
        values[i] = sample.value
        errors[i] = sample.abs_err_estimate
        flags[i] = FLAG_OK

    name, unit = ("G_c", "1/length") if problem is Problem.CAUCHY else ("G_s", "1/time")
    return FigureTable(
        figure_id=FigureId.GREEN_PROFILES,
        columns={"x": x, name: values, f"{name}_err": errors, "flag": flags},
        units={"x": "length", name: unit, f"{name}_err": unit, "flag": "1"},
        metadata={"problem": problem.value, "nu": order.nu, "t": t},
    )


__all__ = [
    "GreenSample",
    "Problem",
    "SpaceTimePoint",
    "green_cauchy",
    "green_signaling",
    "profile",
    "similarity",
]
