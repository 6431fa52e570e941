"""Adaptive quadrature used both inside the special functions and as the
independent oracle of the verification suite.

Three entry points are provided:

* :func:`integrate` -- globally adaptive Gauss-Kronrod (10/21 points) on a
  finite interval,
* :func:`integrate_semi_infinite` -- :math:`\\int_a^\\infty` with a truncation
  point chosen from a caller-supplied analytic tail bound,
* :func:`integrate_oscillatory` -- :math:`\\int_0^\\infty A(\\tau)
  \\cos(\\omega\\tau)\\, d\\tau` (or sine) by summation over half periods with
  Euler acceleration of the resulting alternating series.

Integrands are vectorized: they receive a :class:`numpy.ndarray` of nodes and
must return an array of the same shape.
"""

from __future__ import annotations

import enum
import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from fracwave.errors import QuadratureFailure, TruncationFailure

Integrand = Callable[[np.ndarray], np.ndarray]

# {{{ Gauss-Kronrod 10/21 rule

# abscissae of the 21-point Kronrod rule on [-1, 1] (non-negative half)
_XGK = np.array([
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
])

_WGK = np.array([
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208314202681,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
])

# weights of the embedded 10-point Gauss rule at _XGK[1::2]
_WG = np.array([
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.zeros(21)
GAUSS_WEIGHTS[1:10:2] = _WG
GAUSS_WEIGHTS[11:20:2] = _WG[::-1]

_EPS = np.finfo(float).eps
_TINY = np.finfo(float).tiny


def gauss_kronrod(f: Integrand, a: float, b: float) -> tuple[float, float]:
    """Apply the 21-point Kronrod rule on :math:`[a, b]`.

    :returns: a tuple ``(value, error)`` with the QUADPACK error heuristic.
    """
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fx = np.asarray(f(center + half * NODES), dtype=float)
    if fx.shape != NODES.shape:
        fx = np.broadcast_to(fx, NODES.shape)

    resk = half * float(KRONROD_WEIGHTS @ fx)
    resg = half * float(GAUSS_WEIGHTS @ fx)
    resabs = abs(half) * float(KRONROD_WEIGHTS @ np.abs(fx))
    mean = resk / (b - a) if b != a else 0.0
    resasc = abs(half) * float(KRONROD_WEIGHTS @ np.abs(fx - mean))

    err = abs(resk - resg)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if resabs > _TINY / (50.0 * _EPS):
        err = max(50.0 * _EPS * resabs, err)

    if not (math.isfinite(resk) and math.isfinite(err)):
        raise QuadratureFailure(f"non-finite integrand on [{a!r}, {b!r}]")

    return resk, err

# }}}


# {{{ policies and results


@dataclass(frozen=True)
class QuadPolicy:
    """Tolerances shared by all integrators."""

    abs_tol: float = 1.0e-10
    rel_tol: float = 1.0e-10
    max_subdivisions: int = 2000
    tail_bound_factor: float = 1.0e-14

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0 and self.rel_tol > 0 and self.tail_bound_factor > 0):
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be positive")

    def target(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class QuadResult:
    value: float
    err_estimate: float
    subdivisions: int
    truncation_point: float = math.inf

    def __float__(self) -> float:
        return self.value


class TrigKind(enum.Enum):
    COSINE = "cos"
    SINE = "sin"


# }}}


# {{{ finite intervals


def integrate(
    f: Integrand,
    a: float,
    b: float,
    policy: QuadPolicy | None = None,
    *,
    points: Sequence[float] = (),
) -> QuadResult:
    """Globally adaptive Gauss-Kronrod quadrature of *f* on :math:`[a, b]`.

    The panel with the largest error estimate is bisected until the total
    estimate drops below ``max(abs_tol, rel_tol * |value|)``.

    :arg points: optional interior break points used for the initial panels.
    :raises QuadratureFailure: if ``max_subdivisions`` panels do not suffice.
    """
    if policy is None:
        policy = QuadPolicy()
    if not a < b:
        raise ValueError(f"expected a < b, got a={a!r}, b={b!r}")

    edges = [a, *sorted(p for p in points if a < p < b), b]
    heap: list[tuple[float, float, float, float]] = []
    done: list[tuple[float, float, float]] = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, err = gauss_kronrod(f, lo, hi)
        heapq.heappush(heap, (-err, lo, hi, val))

    npanels = len(heap)
    while True:
        total = math.fsum([v for *_, v in heap] + [v for _, _, v in done])
        err_total = math.fsum([-e for e, *_ in heap] + [e for e, _, _ in done])
        if err_total <= policy.target(total):
            break

        if not heap or npanels >= policy.max_subdivisions:
            raise QuadratureFailure(
                f"no convergence on [{a!r}, {b!r}] after {npanels} panels "
                f"(error estimate {err_total:.3e})",
                value=total,
                err=err_total,
            )

        neg_err, lo, hi, val = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi or (hi - lo) < 1.0e3 * _EPS * max(abs(lo), abs(hi), _TINY):
            # panel at the resolution limit of the floating point grid
            done.append((-neg_err, lo, val))
            continue

        v1, e1 = gauss_kronrod(f, lo, mid)
        v2, e2 = gauss_kronrod(f, mid, hi)
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        npanels += 1

    # deterministic compensated sum in panel order
    panels = sorted([(lo, v) for _, lo, _, v in heap] + [(lo, v) for _, lo, v in done])
    return QuadResult(
        value=math.fsum(v for _, v in panels),
        err_estimate=err_total,
        subdivisions=npanels,
        truncation_point=b,
    )


# }}}


# {{{ semi-infinite intervals


def integrate_semi_infinite(
    f: Integrand,
    tail_bound: Callable[[float], float],
    policy: QuadPolicy | None = None,
    *,
    a: float = 0.0,
    initial: float = 1.0,
    max_truncation: float = 1.0e8,
) -> QuadResult:
    """Integrate *f* over :math:`[a, \\infty)`.

    *tail_bound(T)* must return an upper bound for
    :math:`\\int_T^\\infty |f(u)|\\, du`. The truncation point ``T`` starts at
    ``a + initial`` and is doubled until the bound falls below
    ``tail_bound_factor * |partial value|``; the accepted bound is added to
    the error estimate.

    :raises TruncationFailure: if ``T`` exceeds *max_truncation*.
    """
    if policy is None:
        policy = QuadPolicy()
    if initial <= 0:
        raise ValueError("initial length must be positive")

    lo, hi = a, a + initial
    pieces: list[QuadResult] = []
    while True:
        pieces.append(integrate(f, lo, hi, policy))
        partial = math.fsum(p.value for p in pieces)
        tail = tail_bound(hi)
        if tail <= policy.tail_bound_factor * abs(partial):
            break
        if hi - a > max_truncation:
            raise TruncationFailure(
                f"tail bound {tail:.3e} still too large at T = {hi:.3e}",
                value=partial,
                err=tail,
            )
        lo, hi = hi, a + 2.0 * (hi - a)

    return QuadResult(
        value=partial,
        err_estimate=math.fsum(p.err_estimate for p in pieces) + tail,
        subdivisions=sum(p.subdivisions for p in pieces),
        truncation_point=hi,
    )


# }}}


# {{{ oscillatory integrals


def _euler_average(partial_sums: Sequence[float]) -> float:
    # repeated averaging of consecutive partial sums; equivalent to the
    # Euler transform of the alternating tail
    s = np.array(partial_sums, dtype=float)
    while s.size > 1:
        s = 0.5 * (s[1:] + s[:-1])
    return float(s[0])


def integrate_oscillatory(
    amplitude: Integrand,
    frequency: float,
    kind: TrigKind = TrigKind.COSINE,
    policy: QuadPolicy | None = None,
    *,
    window: int = 12,
    min_half_periods: int = 8,
    max_half_periods: int = 20000,
) -> QuadResult:
    """Compute :math:`\\int_0^\\infty A(\\tau)\\, \\mathrm{trig}(\\omega\\tau)\\, d\\tau`.

    The integral is split at the zeros of the trigonometric factor. The
    partial sums over half periods form an eventually alternating series
    which is accelerated by averaging the last *window* partial sums. The
    procedure stops once two consecutive accelerated estimates agree to the
    policy tolerance; the error estimate is the larger of that increment and
    the accumulated quadrature error.
    """
    if policy is None:
        policy = QuadPolicy()
    if not frequency > 0:
        raise ValueError("frequency must be positive")

    kind = TrigKind(kind)
    trig = np.cos if kind is TrigKind.COSINE else np.sin
    first_zero = 0.5 if kind is TrigKind.COSINE else 1.0
    half = math.pi / frequency

    def integrand(tau: np.ndarray) -> np.ndarray:
        return amplitude(tau) * trig(frequency * tau)

    panel_policy = QuadPolicy(
        abs_tol=0.1 * policy.abs_tol,
        rel_tol=policy.rel_tol,
        max_subdivisions=policy.max_subdivisions,
    )

    sums: list[float] = []
    values: list[float] = []
    quad_err = 0.0
    subdivisions = 0
    previous = math.nan
    hits = 0
    lo = 0.0
    k = 0
    while True:
        hi = (k + first_zero) * half

        r = integrate(integrand, lo, hi, panel_policy)
        values.append(r.value)
        sums.append(math.fsum(values))
        quad_err += r.err_estimate
        subdivisions += r.subdivisions
        lo = hi
        k += 1

        if len(sums) >= max(window, min_half_periods):
            estimate = _euler_average(sums[-window:])
            increment = abs(estimate - previous) if math.isfinite(previous) else math.inf
            previous = estimate
            if increment <= policy.target(estimate):
                hits += 1
                if hits >= 2:
                    return QuadResult(
                        value=estimate,
                        err_estimate=max(increment, quad_err),
                        subdivisions=subdivisions,
                        truncation_point=hi,
                    )
            else:
                hits = 0

        if k >= max_half_periods:
            raise QuadratureFailure(
                f"oscillatory integral did not converge in {k} half periods",
                value=previous,
            )


# }}}
