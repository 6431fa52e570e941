"""Independent high-precision oracle for the frozen test baselines.

Everything here is computed with mpmath from plain power series at a working
precision large enough to absorb the cancellation, and shares no code with
:mod:`fracwave`. Run it to regenerate ``tests/baselines.py``::

    python3 tests/oracles/generate_baselines.py > tests/baselines.py
"""

from __future__ import annotations

import mpmath as mp

NU_GRID = ("0.5", "0.55", "0.6", "0.75", "0.9", "0.95")
R_GRID = ("0", "0.3", "1", "2", "3", "4.5", "6")


# {{{ series


def _dps_for(nu, r) -> int:
    # the largest term is about exp(Y) with Y = (1-nu) nu^(nu/(1-nu)) r^(1/(1-nu))
    nu, r = float(nu), float(r)
    y = (1.0 - nu) * nu ** (nu / (1.0 - nu)) * r ** (1.0 / (1.0 - nu))
    # the sum itself is about exp(-Y), so both ends need digits
    return int(40 + y)


def wright(nu, r, c: int, j: int):
    """sum_n (-r)^n / (n! Gamma(c - nu (n + j)))"""
    s, n, quiet = mp.mpf(0), 0, 0
    while quiet < 4:
        t = (-r) ** n / mp.factorial(n) * mp.rgamma(c - nu * (n + j))
        s += t
        n += 1
        quiet = quiet + 1 if (t == 0 or abs(t) < mp.mpf(10) ** (-mp.mp.dps + 5) * abs(s)) and n > 5 else 0
        if n > 50000:
            raise RuntimeError("oracle series did not converge")
    return s


def M(nu, r):
    return wright(nu, r, 1, 1)


def dM(nu, r):
    return -wright(nu, r, 1, 2)


def cdf(nu, r):
    """Term-wise integral of the M series."""
    s, n, quiet = mp.mpf(0), 0, 0
    while quiet < 4:
        t = (-1) ** n * r ** (n + 1) / mp.factorial(n + 1) * mp.rgamma(1 - nu - nu * n)
        s += t
        n += 1
        quiet = quiet + 1 if (t == 0 or abs(t) < mp.mpf(10) ** (-mp.mp.dps + 5) * abs(s)) and n > 5 else 0
    return s


def ml(alpha, beta, x):
    """E_{alpha,beta}(-x) by direct summation."""
    s, k, quiet = mp.mpf(0), 0, 0
    z = -x
    while quiet < 4:
        t = z**k * mp.rgamma(alpha * k + beta)
        s += t
        k += 1
        quiet = quiet + 1 if (t == 0 or abs(t) < mp.mpf(10) ** (-mp.mp.dps + 5) * abs(s)) and k > 5 else 0
    return s


# }}}


# {{{ derived quantities


def _scan_root(f, lo, hi, n=60):
    xs = [lo + (hi - lo) * i / n for i in range(n + 1)]
    vals = [f(x) for x in xs]
    for a, b, fa, fb in zip(xs, xs[1:], vals, vals[1:]):
        if fa == 0:
            return a
        if fa * fb < 0:
            return mp.findroot(f, (a, b), solver="anderson")
    raise RuntimeError("no sign change")


def _hi(nu):
    return mp.mpf("1.5") if nu > mp.mpf("0.92") else mp.mpf(2)


def peak_cauchy(nu):
    with mp.workdps(_dps_for(nu, _hi(nu)) + 20):
        c = _scan_root(lambda r: dM(nu, r), mp.mpf("1e-6"), _hi(nu))
        return c, M(nu, c) / 2


def peak_signaling(nu):
    with mp.workdps(_dps_for(nu, _hi(nu)) + 20):
        d = _scan_root(lambda r: M(nu, r) + r * dM(nu, r), mp.mpf("0.1"), _hi(nu))
        return d, nu * d * M(nu, d)


def median(nu):
    with mp.workdps(_dps_for(nu, _hi(nu)) + 20):
        return _scan_root(lambda r: cdf(nu, r) - mp.mpf(1) / 2, mp.mpf("0.1"), _hi(nu))


# }}}


def main() -> None:
    out: dict[str, dict] = {"M": {}, "dM": {}, "cdf": {}, "peak_cauchy": {}, "peak_signaling": {},
                            "median": {}, "ml": {}}
    for snu in NU_GRID:
        nu = mp.mpf(snu)
        for sr in R_GRID:
            r = mp.mpf(sr)
            if _dps_for(nu, r) > 400:
                continue
            with mp.workdps(_dps_for(nu, r)):
                out["M"][(float(nu), float(r))] = float(M(nu, r))
                out["dM"][(float(nu), float(r))] = float(dM(nu, r))
                out["cdf"][(float(nu), float(r))] = float(cdf(nu, r))
        if snu != "0.5":
            c, m = peak_cauchy(nu)
            out["peak_cauchy"][float(nu)] = (float(c), float(m))
        d, n = peak_signaling(nu)
        out["peak_signaling"][float(nu)] = (float(d), float(n))
        out["median"][float(nu)] = float(median(nu))

    for a, b in (("0.5", "1"), ("0.75", "1"), ("1.2", "1"), ("1.5", "1.5"), ("1.8", "1.8"),
                 ("1.9", "1"), ("0.3", "0.7")):
        for sx in ("0.5", "2", "10", "40"):
            alpha, beta, x = mp.mpf(a), mp.mpf(b), mp.mpf(sx)
            # the largest term is about exp(x^(1/alpha))
            growth = float(x) ** (1 / float(alpha))
            if growth > 1000:
                continue
            with mp.workdps(int(40 + 0.5 * growth)):
                out["ml"][(float(alpha), float(beta), float(x))] = float(ml(alpha, beta, x))

    print('"""Frozen outputs of ``tests/oracles/generate_baselines.py``."""\n')
    for name, table in out.items():
        print(f"{name.upper()} = {{")
        for key, value in table.items():
            print(f"    {key!r}: {value!r},")
        print("}\n")


if __name__ == "__main__":
    main()
