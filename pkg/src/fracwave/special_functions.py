r"""Gamma, Mainardi, Wright and Mittag-Leffler functions on the real axis.

The Mainardi function

.. math::

    M_\nu(r) = \sum_{n = 0}^\infty \frac{(-r)^n}{n!\, \Gamma(1 - \nu - \nu n)},
    \qquad \frac{1}{2} \le \nu < 1,

is evaluated by its power series for small arguments. The series alternates
and its terms grow like :math:`\exp(c\, r^{1/(1 - \nu)})` before decaying, so
it loses all accuracy at moderate :math:`r`. Beyond a per-order cut-off
radius we switch to the stable-law (Kanter) integral

.. math::

    M_\nu(r) = \frac{r^{\nu/(1-\nu)}}{\pi (1 - \nu)}
        \int_0^\pi U(\phi)\, e^{-r^{1/(1-\nu)} U(\phi)}\, d\phi,
    \qquad
    U(\phi) = \left(\frac{\sin \nu\phi}{\sin \phi}\right)^{1/(1-\nu)}
        \frac{\sin (1-\nu)\phi}{\sin \nu\phi},

whose integrand is positive, so no cancellation occurs. Its minimum
:math:`U(0) = (1-\nu)\nu^{\nu/(1-\nu)}` reproduces the exponent
:math:`Y = (1-\nu)(\nu^\nu r)^{1/(1-\nu)}` of the saddle point asymptotics,
which is factored out analytically. The same kernel gives the cumulative
integral :math:`\int_0^x M_\nu` in closed form up to a single quadrature.

Mittag-Leffler functions on the negative real axis are computed by series for
small arguments and otherwise by a real integral representation obtained
from the Hankel contour, reduced to :math:`0 < \alpha \le 1` by the
doubling identity :math:`E_{\alpha,\beta}(-x) = \Re E_{\alpha/2,\beta}(i\sqrt{x})`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special as sps

from fracwave.errors import DegenerateOrder, DomainError, PoleError, PolicyExhausted
from fracwave.quadrature import QuadPolicy, integrate

_EPS = float(np.finfo(float).eps)

#: beyond this value of the asymptotic exponent ``Y`` the two-term asymptotic
#: expansion is used; ``exp(-Y)`` is then below the smallest normal double
ASYMPTOTIC_EXPONENT = 708.0

#: series/kernel hand-over: largest admissible estimated relative rounding
#: error of the power series
CROSSOVER_ROUNDING = 1.0e-12


# {{{ types


@dataclass(frozen=True)
class FractionalOrder:
    """Half the order of the time derivative, :math:`\\nu = \\beta / 2`."""

    nu: float

    def __post_init__(self) -> None:
        nu = float(self.nu)
        if not 0.5 <= nu <= 1.0:
            raise DomainError(f"order nu must lie in [1/2, 1], got {self.nu!r}")
        object.__setattr__(self, "nu", nu)

    @property
    def beta(self) -> float:
        return 2.0 * self.nu

    def __float__(self) -> float:
        return self.nu


def as_order(nu: FractionalOrder | float) -> FractionalOrder:
    return nu if isinstance(nu, FractionalOrder) else FractionalOrder(nu)


def _pointwise_order(nu: FractionalOrder | float) -> float:
    order = as_order(nu)
    if order.nu == 1.0:
        raise DegenerateOrder(
            "M_1 is the delta distribution concentrated at r = 1; "
            "no pointwise value exists"
        )
    return order.nu


class Method(enum.Enum):
    SERIES = "series"
    ASYMPTOTIC = "asymptotic"
    QUADRATURE = "quadrature"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class EvalResult:
    """A function value together with an absolute error estimate and the
    method that produced it."""

    value: float
    abs_err_estimate: float
    method: Method

    def __post_init__(self) -> None:
        if not (math.isfinite(self.abs_err_estimate) and self.abs_err_estimate >= 0):
            raise ValueError(f"invalid error estimate {self.abs_err_estimate!r}")

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class SeriesPolicy:
    """Controls the power series and the switch to the integral kernels.

    :arg asymptotic_crossover: radius beyond which the power series is
        abandoned. ``None`` selects :func:`series_crossover` for each order.
    """

    rel_tol: float = 1.0e-14
    max_terms: int = 500
    asymptotic_crossover: float | None = None

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_terms < 10:
            raise ValueError("max_terms must be at least 10")
        if self.asymptotic_crossover is not None and not self.asymptotic_crossover > 0:
            raise ValueError("asymptotic_crossover must be positive")

    def crossover(self, nu: float) -> float:
        if self.asymptotic_crossover is not None:
            return self.asymptotic_crossover
        return series_crossover(nu, self.max_terms)

    def kernel_quad_policy(self) -> QuadPolicy:
        # positive integrands: the relative target is the binding one
        return QuadPolicy(abs_tol=1.0e-300, rel_tol=20.0 * self.rel_tol)


DEFAULT_POLICY = SeriesPolicy()

# }}}


# {{{ gamma function


def _sinpi(x: np.ndarray | float) -> np.ndarray:
    """:math:`\\sin(\\pi x)` with exact zeros at the integers."""
    x = np.asarray(x, dtype=float)
    # exact reduction to [-1, 1]; np.remainder rounds tiny negatives to 2
    r = x - 2.0 * np.round(0.5 * x)
    r = np.where(r > 0.5, 1.0 - r, r)
    r = np.where(r < -0.5, -1.0 - r, r)
    return np.sin(np.pi * r)


def gamma(x: float) -> float:
    """The gamma function.

    :raises PoleError: at :math:`x \\in \\{0, -1, -2, \\dots\\}`.
    """
    x = float(x)
    if x <= 0 and x.is_integer():
        raise PoleError(f"gamma has a pole at x = {x!r}")
    try:
        return math.gamma(x)
    except OverflowError:
        return math.inf


def reciprocal_gamma(x: float) -> float:
    """:math:`1/\\Gamma(x)`, an entire function; zero at the poles of
    :math:`\\Gamma`."""
    x = float(x)
    if x <= 0 and x.is_integer():
        return 0.0
    if x < 0.5:
        # reflection keeps full relative accuracy for negative arguments
        try:
            return math.gamma(1.0 - x) * float(_sinpi(x)) / math.pi
        except OverflowError:
            return math.copysign(math.inf, float(_sinpi(x)))
    try:
        return 1.0 / math.gamma(x)
    except OverflowError:
        return 0.0


# }}}


# {{{ Wright-type power series


@dataclass(frozen=True)
class _SeriesSum:
    value: float
    rounding: float
    truncation: float
    nterms: int

    @property
    def error(self) -> float:
        return self.rounding + self.truncation


def _wright_terms(r: float, nu: float, c: int, j: int, nterms: int) -> tuple[np.ndarray, np.ndarray]:
    """Terms ``(-r)^n / (n! Gamma(y_n))`` with ``y_n = c - nu (n + j)`` and
    their envelopes ``r^n / n! * |1/Gamma|`` without the sine factor (an
    upper bound).

    With ``m = n + j`` and the exact ``delta = 1 - nu`` the sine factor is
    ``sin(pi y_n) = (-1)^(c+m) sin(pi m delta)``, which stays accurate when
    ``y_n`` is close to an integer.
    """
    n = np.arange(nterms, dtype=float)
    m = n + j
    delta = 1.0 - nu
    x = nu * m
    y = c - x

    with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
        power = np.cumprod(np.concatenate([[1.0], r / n[1:]]))

        # 1/Gamma(y) = Gamma(1 - y) sin(pi y) / pi for y <= 0
        reflected = y <= 0.0
        one_minus_y = np.where(reflected, (1 - c) + x, 1.0)
        direct = sps.rgamma(np.where(reflected, 1.0, y))
        envelope_factor = np.where(reflected, sps.gamma(one_minus_y) / np.pi, np.abs(direct))
        sine = np.where(np.remainder(m + c, 2.0) == 0.0, 1.0, -1.0) * _sinpi(m * delta)
        sign = np.where(reflected, np.sign(sine), np.sign(direct))
        sinabs = np.where(reflected, np.abs(sine), 1.0)
        envelope = power * envelope_factor

        # large n: gamma overflows and/or the power underflows
        bad = ~np.isfinite(envelope) | ((power == 0.0) & (r > 0.0))
        if np.any(bad):
            logr = math.log(r) if r > 0 else -math.inf
            log_env = n * logr - sps.gammaln(n + 1.0) + sps.gammaln(one_minus_y) - math.log(math.pi)
            envelope = np.where(bad, np.exp(log_env), envelope)

    parity = np.where(np.remainder(n, 2.0) == 0.0, 1.0, -1.0)
    terms = parity * sign * sinabs * envelope
    return terms, envelope


def _sum_series(
    terms: np.ndarray,
    envelope: np.ndarray,
    rel_tol: float,
    what: str,
) -> _SeriesSum:
    if not np.all(np.isfinite(terms)):
        raise PolicyExhausted(f"{what}: series terms overflow")

    partial = np.cumsum(terms)
    # near a zero of the sum the relative target is unreachable; stop once
    # the envelope drops below the accumulated rounding level instead
    floor = _EPS * np.cumsum(np.abs(terms))
    small = envelope <= np.maximum(rel_tol * np.abs(partial), floor)
    decreasing = np.concatenate([envelope[1:] <= envelope[:-1], [False]])
    ok = small & decreasing
    run = ok[:-2] & ok[1:-1] & ok[2:]
    hits = np.flatnonzero(run)
    if hits.size == 0:
        raise PolicyExhausted(
            f"{what}: series did not reach rel_tol={rel_tol:.1e} "
            f"within {terms.size} terms"
        )

    last = int(hits[0]) + 2
    used = terms[: last + 1]
    k = np.arange(used.size, dtype=float)
    # the n-th term carries about n rounding errors from the running product
    rounding = _EPS * float(np.sum((3.0 + k) * np.abs(used)))
    # geometric bound on the omitted tail from the last envelope ratio
    truncation = 0.0
    if last + 1 < envelope.size:
        tail = float(envelope[last + 1])
        ratio = tail / float(envelope[last]) if envelope[last] > 0 else 0.0
        truncation = tail / (1.0 - min(ratio, 0.99))
    return _SeriesSum(math.fsum(used), rounding, truncation, used.size)


def _wright_series(r: float, nu: float, c: int, j: int, policy: SeriesPolicy, what: str) -> _SeriesSum:
    # grow the number of terms geometrically; a prefix of the term arrays is
    # bitwise identical to the full arrays, so the result does not depend on
    # the chunking
    nterms = min(64, policy.max_terms)
    while True:
        terms, envelope = _wright_terms(r, nu, c, j, nterms)
        try:
            return _sum_series(terms, envelope, policy.rel_tol, what)
        except PolicyExhausted:
            if nterms >= policy.max_terms:
                raise
        nterms = min(2 * nterms, policy.max_terms)


@lru_cache(maxsize=512)
def series_crossover(nu: float, max_terms: int = 500) -> float:
    """Radius up to which the power series of :math:`M_\\nu` is used.

    Defined as the smallest :math:`r` at which the series of :math:`M_\\nu`
    or :math:`M_\\nu'` stops converging within *max_terms*, or the estimated
    rounding error of the former exceeds
    ``CROSSOVER_ROUNDING`` relative to the sum. Found by bisection and cached
    per order.
    """
    nu = float(nu)
    policy = SeriesPolicy(max_terms=max_terms, asymptotic_crossover=1.0)

    def admissible(r: float) -> bool:
        try:
            s = _wright_series(r, nu, 1, 1, policy, "crossover")
            # the derivative series converges more slowly near nu = 1
            _wright_series(r, nu, 1, 2, policy, "crossover")
        except PolicyExhausted:
            return False
        return s.value > 0 and s.rounding <= CROSSOVER_ROUNDING * s.value

    lo, hi = 0.0, 0.5
    while admissible(hi):
        lo, hi = hi, 2.0 * hi
        if hi > 1.0e3:
            return lo
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if admissible(mid):
            lo = mid
        else:
            hi = mid
        if hi - lo < 1.0e-6 * hi:
            break
    return lo


# }}}


# {{{ stable-law kernel


def _kernel_constants(nu: float, r: float) -> tuple[float, float, float]:
    k = 1.0 / (1.0 - nu)
    u0 = (1.0 - nu) * nu ** (nu * k)
    s = _safe_exp(k * math.log(r)) if r > 0 else 0.0
    return s, u0, s * u0


def _conditioning(y: float) -> float:
    # relative rounding error of exp(-Y) type factors with Y of size y
    return 4.0 * (1.0 + y) * _EPS


def _safe_exp(x: float) -> float:
    return math.exp(x) if x < 709.0 else math.inf


def _kernel_integral(nu: float, r: float, power: int, policy: SeriesPolicy) -> tuple[float, float]:
    """:math:`\\int_0^\\pi U^m e^{-s (U - U_0)} d\\phi` with ``s = r^{1/(1-nu)}``."""
    k = 1.0 / (1.0 - nu)
    s, u0, ylead = _kernel_constants(nu, r)
    log_u0 = math.log(u0)

    def integrand(phi: np.ndarray) -> np.ndarray:
        with np.errstate(over="ignore", under="ignore", divide="ignore", invalid="ignore"):
            sin_nu = np.sin(nu * phi)
            log_u = (
                k * (np.log(sin_nu) - np.log(np.sin(phi)))
                + np.log(np.sin((1.0 - nu) * phi))
                - np.log(sin_nu)
            )
            finite = np.isfinite(log_u) & (log_u < 700.0)
            log_u = np.where(finite, log_u, 0.0)
            excess = u0 * np.expm1(log_u - log_u0)
            out = np.exp(power * log_u - s * excess)
        return np.where(finite, out, 0.0)

    # beyond this angle the quadratic approximation of U already puts the
    # integrand below exp(-40)
    points = []
    if ylead > 0:
        cut = math.sqrt(80.0 / (nu * ylead))
        if cut < math.pi:
            points.append(cut)

    res = integrate(integrand, 0.0, math.pi, policy.kernel_quad_policy(), points=points)
    return res.value, res.err_estimate


# }}}


# {{{ asymptotics


def asymptotic_exponent(nu: float, r: float) -> float:
    """:math:`Y = (1 - \\nu)(\\nu^\\nu r)^{1/(1-\\nu)}`."""
    if r == 0.0:
        return 0.0
    return (1.0 - nu) * _safe_exp((nu * math.log(nu) + math.log(r)) / (1.0 - nu))


def asymptotic_prefactor(nu: float) -> float:
    """Leading constant :math:`A_0` of :math:`M_\\nu(r) \\sim A_0 Y^{\\nu-1/2} e^{-Y}`.

    Obtained by Laplace's method on the stable-law kernel around
    :math:`\\phi = 0`, where :math:`\\log U(\\phi) = \\log U_0 + \\nu\\phi^2/2 +
    O(\\phi^4)`.
    """
    return nu ** (nu - 0.5) / (math.sqrt(2.0 * math.pi) * (1.0 - nu) ** nu)


def literal_asymptotic_prefactor(nu: float) -> float:
    """The frequently quoted constant
    :math:`1/(\\sqrt{2\\pi}(1-\\nu)^\\nu \\nu^{2\\nu-1})`.

    It agrees with :func:`asymptotic_prefactor` only at :math:`\\nu = 1/2`;
    elsewhere :math:`A_0` is this constant times :math:`\\nu^{3\\nu - 3/2}`. Kept for
    comparison only.
    """
    return 1.0 / (math.sqrt(2.0 * math.pi) * (1.0 - nu) ** nu * nu ** (2.0 * nu - 1.0))


def asymptotic_correction(nu: float) -> float:
    """Coefficient :math:`c_1` of the relative correction :math:`1 + c_1 / Y`."""
    return (2.0 - nu) * (2.0 * nu - 1.0) / (24.0 * nu)


def mainardi_m_asymptotic(nu: FractionalOrder | float, r: float) -> float:
    """Two-term large-:math:`r` expansion
    :math:`A_0 Y^{\\nu - 1/2} e^{-Y} (1 + c_1/Y)`."""
    nu = _pointwise_order(nu)
    y = asymptotic_exponent(nu, r)
    if y == 0.0:
        return math.inf if nu > 0.5 else asymptotic_prefactor(nu)
    if math.isinf(y):
        return 0.0
    log_value = (
        math.log(asymptotic_prefactor(nu))
        + (nu - 0.5) * math.log(y)
        - y
        + math.log1p(asymptotic_correction(nu) / y)
    )
    return math.exp(log_value)


def mainardi_tail_bound(nu: FractionalOrder | float, t: float, s: float = 1.0) -> float:
    """Bound for :math:`\\int_T^\\infty u^{s-1} M_\\nu(u)\\, du` from the
    asymptotic envelope (with a safety factor of 2).

    Returns ``inf`` when ``T`` is too small for the envelope to be trusted.
    """
    nu = _pointwise_order(nu)
    y = asymptotic_exponent(nu, t)
    if y < 2.0:
        return math.inf
    a = (1.0 - nu) * s + nu - 0.5
    b = (1.0 - nu) * nu ** (nu / (1.0 - nu))
    scale = asymptotic_prefactor(nu) * (1.0 - nu) * b ** (-(1.0 - nu) * s)
    return 2.0 * scale * float(sps.gammaincc(a, y) * sps.gamma(a))


# }}}


# {{{ Mainardi function


def _check_radius(r: float, name: str = "r") -> float:
    r = float(r)
    if not r >= 0.0 or math.isinf(r):
        raise DomainError(f"{name} must be finite and non-negative, got {r!r}")
    return r


def mainardi_m(
    nu: FractionalOrder | float,
    r: float,
    policy: SeriesPolicy | None = None,
) -> EvalResult:
    """The Mainardi function :math:`M_\\nu(r)` for :math:`r \\ge 0`.

    :raises DegenerateOrder: for ``nu = 1``.
    :raises PolicyExhausted: if the power series does not converge below the
        cut-off radius.
    """
    nu = _pointwise_order(nu)
    r = _check_radius(r)
    policy = policy or DEFAULT_POLICY

    if r <= policy.crossover(nu):
        s = _wright_series(r, nu, 1, 1, policy, "M_nu")
        return EvalResult(s.value, s.error, Method.SERIES)

    _, _, y = _kernel_constants(nu, r)
    if y > ASYMPTOTIC_EXPONENT:
        value = mainardi_m_asymptotic(nu, r)
        return EvalResult(value, value * (asymptotic_correction(nu) / y) ** 2, Method.ASYMPTOTIC)

    integral, err = _kernel_integral(nu, r, 1, policy)
    scale = math.exp((nu / (1.0 - nu)) * math.log(r) - y) / (math.pi * (1.0 - nu))
    value = scale * integral
    return EvalResult(value, scale * err + _conditioning(y) * value, Method.QUADRATURE)


def mainardi_m_derivative(
    nu: FractionalOrder | float,
    r: float,
    policy: SeriesPolicy | None = None,
) -> EvalResult:
    """The derivative :math:`M_\\nu'(r)`."""
    nu = _pointwise_order(nu)
    r = _check_radius(r)
    policy = policy or DEFAULT_POLICY

    if r <= policy.crossover(nu):
        # M'(r) = -sum (-r)^n / (n! Gamma(1 - 2 nu - nu n))
        s = _wright_series(r, nu, 1, 2, policy, "M_nu'")
        return EvalResult(-s.value, s.error, Method.SERIES)

    k = 1.0 / (1.0 - nu)
    p = nu * k
    _, _, y = _kernel_constants(nu, r)
    if y > ASYMPTOTIC_EXPONENT:
        # d/dr of the leading asymptotics: Y' = k Y / r
        m = mainardi_m_asymptotic(nu, r)
        value = m * (k / r) * ((nu - 0.5) / y - 1.0)
        return EvalResult(value, abs(value) * asymptotic_correction(nu) / y, Method.ASYMPTOTIC)

    i1, e1 = _kernel_integral(nu, r, 1, policy)
    i2, e2 = _kernel_integral(nu, r, 2, policy)
    scale = math.exp(p * math.log(r) - y) / (math.pi * (1.0 - nu))
    s = r**k
    value = scale * (p * i1 - k * s * i2) / r
    err = scale * (p * e1 + k * s * e2) / r + _conditioning(y) * scale * (p * i1 + k * s * i2) / r
    return EvalResult(value, err, Method.QUADRATURE)


def mainardi_m_array(
    nu: FractionalOrder | float,
    r: np.ndarray,
    policy: SeriesPolicy | None = None,
) -> np.ndarray:
    """Elementwise :func:`mainardi_m` values (error estimates dropped)."""
    r = np.asarray(r, dtype=float)
    out = np.empty_like(r)
    for i, ri in np.ndenumerate(r):
        out[i] = mainardi_m(nu, float(ri), policy).value
    return out


# }}}


# {{{ Wright function F_nu


def wright_f(
    nu: FractionalOrder | float,
    r: float,
    policy: SeriesPolicy | None = None,
) -> EvalResult:
    """The auxiliary function :math:`F_\\nu(r) = \\nu r M_\\nu(r)`."""
    order = as_order(nu)
    m = mainardi_m(order, r, policy)
    scale = order.nu * float(r)
    return EvalResult(scale * m.value, scale * m.abs_err_estimate, m.method)


def verify_wright_f(
    nu: FractionalOrder | float,
    r: float,
    policy: SeriesPolicy | None = None,
) -> EvalResult:
    """Direct power series :math:`F_\\nu(r) = \\sum_{n\\ge1} (-r)^n /
    (n!\\,\\Gamma(-\\nu n))`, independent of :func:`mainardi_m`.

    Always uses the series, regardless of the cut-off radius; the returned
    error estimate reflects the cancellation.
    """
    nu = _pointwise_order(nu)
    r = _check_radius(r)
    policy = policy or DEFAULT_POLICY
    s = _wright_series(r, nu, 0, 0, policy, "F_nu")
    return EvalResult(s.value, s.error, Method.SERIES)


# }}}


# {{{ cumulative integral


def mainardi_m_sf(
    nu: FractionalOrder | float,
    x: float,
    policy: SeriesPolicy | None = None,
) -> EvalResult:
    """Survival function :math:`\\int_x^\\infty M_\\nu(u)\\, du`."""
    nu = _pointwise_order(nu)
    x = _check_radius(x, "x")
    policy = policy or DEFAULT_POLICY

    if x <= policy.crossover(nu):
        c = mainardi_m_cdf(nu, x, policy)
        return EvalResult(1.0 - c.value, c.abs_err_estimate + _EPS, c.method)

    _, _, y = _kernel_constants(nu, x)
    if y > ASYMPTOTIC_EXPONENT:
        # the tail is below the smallest normal double
        return EvalResult(0.0, mainardi_tail_bound(nu, x), Method.ASYMPTOTIC)

    integral, err = _kernel_integral(nu, x, 0, policy)
    scale = math.exp(-y) / math.pi
    value = scale * integral
    return EvalResult(value, scale * err + _conditioning(y) * value, Method.QUADRATURE)


def mainardi_m_cdf(
    nu: FractionalOrder | float,
    x: float,
    policy: SeriesPolicy | None = None,
) -> EvalResult:
    """Cumulative integral :math:`C(x) = \\int_0^x M_\\nu(u)\\, du`.

    Small ``x`` uses the termwise integrated power series; larger ``x`` uses
    ``1 - sf`` with the survival function from the stable-law kernel.
    """
    nu = _pointwise_order(nu)
    x = _check_radius(x, "x")
    policy = policy or DEFAULT_POLICY

    if x <= policy.crossover(nu):
        terms, envelope = _wright_terms(x, nu, 1, 1, policy.max_terms)
        weights = x / np.arange(1.0, terms.size + 1.0)
        s = _sum_series(terms * weights, envelope * weights, policy.rel_tol, "C_nu")
        return EvalResult(s.value, s.error, Method.SERIES)

    tail = mainardi_m_sf(nu, x, policy)
    return EvalResult(1.0 - tail.value, tail.abs_err_estimate + _EPS, tail.method)


# }}}


# {{{ Mittag-Leffler function

#: the power series is used for |z|^(1/alpha) up to this value
ML_SERIES_RADIUS = 3.0


def _ml_series(alpha: float, beta: float, x: float, policy: SeriesPolicy) -> _SeriesSum:
    k = np.arange(policy.max_terms, dtype=float)
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        rg = sps.rgamma(alpha * k + beta)
        power = np.cumprod(np.concatenate([[1.0], np.full(k.size - 1, x)]))
        envelope = power * np.abs(rg)
        terms = np.where(np.remainder(k, 2.0) == 0.0, 1.0, -1.0) * power * rg
    # avoid 0 * inf once the powers overflow well past convergence
    terms = np.where(np.isfinite(terms), terms, 0.0)
    envelope = np.where(np.isfinite(envelope), envelope, np.inf)
    return _sum_series(terms, envelope, policy.rel_tol, "E_alpha,beta")


def _ml_kernel(a: float, beta: float, w: complex, residue: bool, policy: SeriesPolicy) -> tuple[complex, float]:
    """:math:`E_{a,\\beta}(w)` for ``0 < a <= 1`` and ``beta < 1 + a``.

    ``residue`` selects the case :math:`|\\arg w| < a\\pi`. Only the real
    part of the kernel integral is computed, which suffices because all
    callers take real parts.
    """
    gam = (1.0 - beta) / a
    q = 1.0 / (gam + 1.0)
    s1 = math.sin(math.pi * (1.0 - beta))
    s2 = math.sin(math.pi * (1.0 - beta + a))
    c = math.cos(a * math.pi)

    # chi = u^q removes the endpoint singularity chi^gam
    def integrand(u: np.ndarray) -> np.ndarray:
        chi = u**q
        with np.errstate(under="ignore"):
            damp = np.exp(-(chi ** (1.0 / a)))
        num = chi * s1 - w * s2
        den = chi * chi - 2.0 * chi * w * c + w * w
        return (q / (a * math.pi)) * damp * np.real(num / den)

    u_max = 45.0 ** (a / q)
    points = []
    u_pole = abs(w) ** (1.0 / q)
    if 0.0 < u_pole < u_max:
        points.append(u_pole)

    qp = QuadPolicy(abs_tol=10.0 * policy.rel_tol, rel_tol=20.0 * policy.rel_tol)
    res = integrate(integrand, 0.0, u_max, qp, points=points)
    value: complex = complex(res.value)
    err = res.err_estimate + 8.0 * _EPS * abs(res.value)
    if residue:
        pole = w ** ((1.0 - beta) / a) * np.exp(w ** (1.0 / a)) / a
        value += pole
        err += 8.0 * _EPS * abs(pole)
    return value, err


def _ml_small_alpha(a: float, beta: float, w: complex, residue: bool, policy: SeriesPolicy) -> tuple[complex, float]:
    # E_{a,b}(w) = (E_{a,b-a}(w) - 1/Gamma(b-a)) / w lowers beta below 1 + a
    if beta >= 1.0 + a:
        inner, err = _ml_small_alpha(a, beta - a, w, residue, policy)
        return (inner - reciprocal_gamma(beta - a)) / w, err / abs(w)
    return _ml_kernel(a, beta, w, residue, policy)


def _ml_unit_alpha(beta: float, x: float, policy: SeriesPolicy) -> tuple[float, float]:
    # E_{1,b}(-x) = 1/Gamma(b-1) int_0^1 (1-t)^(b-2) e^(-x t) dt for b > 1
    if beta == 1.0:
        return math.exp(-x), _EPS * math.exp(-x)
    if beta < 1.0:
        inner, err = _ml_unit_alpha(beta + 1.0, x, policy)
        return reciprocal_gamma(beta) - x * inner, x * err + _EPS

    e = 1.0 / (beta - 1.0)

    def integrand(v: np.ndarray) -> np.ndarray:
        return np.exp(-x * (1.0 - v**e))

    qp = QuadPolicy(abs_tol=10.0 * policy.rel_tol, rel_tol=20.0 * policy.rel_tol)
    res = integrate(integrand, 0.0, 1.0, qp)
    rg = reciprocal_gamma(beta)
    return rg * res.value, rg * res.err_estimate


def mittag_leffler(
    alpha: float,
    beta_param: float,
    z: float,
    policy: SeriesPolicy | None = None,
) -> EvalResult:
    """Two-parameter Mittag-Leffler function :math:`E_{\\alpha,\\beta}(z)` for
    real :math:`z \\le 0`, :math:`0 < \\alpha \\le 2`, :math:`\\beta > 0`."""
    alpha = float(alpha)
    beta = float(beta_param)
    z = float(z)
    if not 0.0 < alpha <= 2.0:
        raise DomainError(f"alpha must lie in (0, 2], got {alpha!r}")
    if not beta > 0.0:
        raise DomainError(f"beta must be positive, got {beta!r}")
    if not z <= 0.0 or math.isinf(z):
        raise DomainError(f"z must be finite and non-positive, got {z!r}")
    policy = policy or DEFAULT_POLICY

    x = -z
    if alpha == 1.0 and beta == 1.0:
        v = math.exp(z)
        return EvalResult(v, _EPS * v, Method.CLOSED_FORM)

    if x ** (1.0 / alpha) <= ML_SERIES_RADIUS:
        s = _ml_series(alpha, beta, x, policy)
        return EvalResult(s.value, s.error, Method.SERIES)

    if alpha < 1.0:
        value, err = _ml_small_alpha(alpha, beta, complex(z), False, policy)
    elif alpha == 1.0:
        v, err = _ml_unit_alpha(beta, x, policy)
        value = complex(v)
    else:
        w = complex(0.0, math.sqrt(x))
        value, err = _ml_small_alpha(alpha / 2.0, beta, w, True, policy)

    return EvalResult(float(value.real), float(err + 4.0 * _EPS * abs(value)), Method.QUADRATURE)


def mittag_leffler_array(alpha: float, beta_param: float, z: np.ndarray, policy: SeriesPolicy | None = None) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    out = np.empty_like(z)
    for i, zi in np.ndenumerate(z):
        out[i] = mittag_leffler(alpha, beta_param, float(zi), policy).value
    return out


# }}}
