"""The ``fracwave`` command line interface.

Exit codes: 0 success, 1 failed verification, 2 usage or domain error,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

import numpy as np

from fracwave.errors import ConvergenceError, DomainError
from fracwave.extrema import (
    SolverPolicy,
    cauchy_peak_integral,
    max_location_cauchy,
    max_location_signaling,
    signaling_peak_integral,
)
from fracwave.figures import (
    DEFAULT_X,
    FIGURE_IDS,
    Grid,
    RunConfig,
    _Rows,
    _table,
    figure,
    median_table,
    metadata_json,
    to_csv,
    to_json,
)
from fracwave.green_functions import green_cauchy, green_signaling
from fracwave.moments import mellin_moment, mellin_moment_quadrature
from fracwave.quadrature import QuadPolicy
from fracwave.special_functions import (
    FractionalOrder,
    SeriesPolicy,
    mainardi_m,
    wright_f,
)
from fracwave.tables import (
    FLAG_DOMAIN,
    FLAG_NONCONVERGENCE,
    FLAG_OK,
    FigureId,
    FigureTable,
)
from fracwave.verification import run_checks

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3

#: orders above this value get a conditioning warning
CONDITIONING_WARNING_NU = 0.95


# {{{ commands


def cmd_eval(config: RunConfig) -> FigureTable:
    """M, F, G_c and G_s with error estimates and method tags on the grids."""
    nus = config.nus()
    ts = config.times(Grid(1.0, 1.0, 1))
    xs = config.positions(DEFAULT_X)
    names = ["nu", "t", "x", "r", "M", "M_err", "M_method", "F", "F_err",
             "G_c", "G_c_err", "G_s", "G_s_err"]
    rows = _Rows(names)
    for nu in nus:
        for t in ts:
            for x in xs:
                def compute(nu: float = nu, t: float = t, x: float = x) -> dict:
                    gc = green_cauchy(x, t, nu, config.series)
                    m = mainardi_m(nu, gc.similarity_r, config.series)
                    f = wright_f(nu, gc.similarity_r, config.series)
                    out = {
                        "r": gc.similarity_r, "M": m.value, "M_err": m.abs_err_estimate,
                        "M_method": m.method.value, "F": f.value, "F_err": f.abs_err_estimate,
                        "G_c": gc.value, "G_c_err": gc.abs_err_estimate,
                    }
                    if x > 0:
                        gs = green_signaling(x, t, nu, config.series)
                        out.update(G_s=gs.value, G_s_err=gs.abs_err_estimate)
                    return out

                rows.add({"nu": nu, "t": float(t), "x": float(x)}, compute)
    units = {"nu": "1", "t": "time", "x": "length", "r": "1", "M": "1", "M_err": "1",
             "M_method": "1", "F": "1", "F_err": "1", "G_c": "1/length", "G_c_err": "1/length",
             "G_s": "1/time", "G_s_err": "1/time"}
    return _table(FigureId.EVAL, rows, units, config,
                  nu_grid=nus, t_grid=ts.tolist(), x_grid=xs.tolist())


def cmd_extrema(config: RunConfig) -> FigureTable:
    """Peak locations and heights, with the integral representations of the
    heights as an independent second route."""
    nus = config.nus()
    names = ["nu", "c_nu", "c_nu_err", "m_nu", "m_nu_err", "m_nu_integral", "m_nu_integral_err",
             "d_nu", "d_nu_err", "n_nu", "n_nu_err", "n_nu_integral", "n_nu_integral_err"]
    rows = _Rows(names)
    osc = QuadPolicy(abs_tol=1.0e-9, rel_tol=1.0e-9)
    loc_err = config.solver.location_tol
    for nu in nus:
        def compute(nu: float = nu) -> dict:
            out = {}
            if nu > 0.5:
                c = max_location_cauchy(nu, config.solver, config.series).location
                m = mainardi_m(nu, c, config.series)
                mi = cauchy_peak_integral(nu, c, osc, config.series)
                out.update(c_nu=c, c_nu_err=loc_err, m_nu=0.5 * m.value,
                           m_nu_err=0.5 * m.abs_err_estimate,
                           m_nu_integral=mi.value, m_nu_integral_err=mi.err_estimate)
            else:
                # diffusion limit: the peak sits at the origin
                m = mainardi_m(nu, 0.0, config.series)
                out.update(c_nu=0.0, c_nu_err=0.0, m_nu=0.5 * m.value,
                           m_nu_err=0.5 * m.abs_err_estimate)
            d = max_location_signaling(nu, config.solver, config.series)
            md = mainardi_m(nu, d.location, config.series)
            ni = signaling_peak_integral(nu, d.location, osc, config.series)
            out.update(d_nu=d.location, d_nu_err=loc_err, n_nu=d.value,
                       n_nu_err=nu * d.location * md.abs_err_estimate,
                       n_nu_integral=ni.value, n_nu_integral_err=ni.err_estimate)
            return out

        rows.add({"nu": nu}, compute)
    units = dict.fromkeys(names, "1")
    return _table(FigureId.EXTREMA, rows, units, config, nu_grid=nus,
                  note="integral columns are independent representations of m_nu and n_nu; "
                       "m_nu_integral is undefined at nu = 1/2")


def cmd_moments(config: RunConfig) -> FigureTable:
    nus = config.nus()
    rows = _Rows(["nu", "s", "closed_form", "oracle", "oracle_err", "abs_discrepancy"])
    quad = QuadPolicy(abs_tol=1.0e-12, rel_tol=min(config.quad.rel_tol, 1.0e-12))
    for nu in nus:
        for s in (1.0, 2.0, 3.0):
            def compute(nu: float = nu, s: float = s) -> dict:
                closed = mellin_moment(nu, s)
                q = mellin_moment_quadrature(nu, s, quad, config.series)
                return {"closed_form": closed, "oracle": q.value,
                        "oracle_err": q.err_estimate, "abs_discrepancy": abs(q.value - closed)}

            rows.add({"nu": nu, "s": s}, compute)
    units = {"nu": "1", "s": "1", "closed_form": "1", "oracle": "1", "oracle_err": "1",
             "abs_discrepancy": "1"}
    return _table(FigureId.MOMENTS, rows, units, config, closed_form=("closed_form",),
                  diagnostic=("abs_discrepancy",), nu_grid=nus)


def cmd_median(config: RunConfig) -> FigureTable:
    """Median coefficients; the same table as the ``MedianTable`` figure."""
    return median_table(config)


def cmd_verify(config: RunConfig, out: TextIO) -> int:
    failed = 0
    out.write(f"{'check':<38} {'nu':>6} {'discrepancy':>12} {'threshold':>10}  result\n")
    for check in run_checks(config):
        status = "PASS" if check.passed else "FAIL"
        failed += not check.passed
        out.write(f"{check.name:<38} {check.nu:>6.3f} {check.discrepancy:>12.3e} "
                  f"{check.threshold:>10.1e}  {status}\n")
        out.flush()
    out.write(f"{'all checks passed' if failed == 0 else f'{failed} check(s) failed'}\n")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


# }}}


# {{{ argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--nu", help="comma-separated orders in [0.5, 1]")
    p.add_argument("--t-range", help="time grid 'min:max:n' (geometric spacing)")
    p.add_argument("--x-range", help="space grid 'min:max:n' (uniform spacing)")
    p.add_argument("--tol", type=float, help="relative tolerance for series and quadrature")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output file; a .meta.json sidecar is written next to CSV output")
    p.add_argument("--seed-free", action="store_true",
                   help="reserved; rejected because every computation is deterministic")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fracwave", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_text in [
        ("eval", "tabulate M, F and the Green functions"),
        ("extrema", "maximum locations and values, both representations"),
        ("moments", "Mellin moments against quadrature"),
        ("median", "median coefficients"),
        ("verify", "run the oracle suite"),
    ]:
        _common(sub.add_parser(name, help=help_text))
    fig = sub.add_parser("figure", help="data behind a figure")
    fig.add_argument("figure_id", choices=FIGURE_IDS)
    _common(fig)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    if args.seed_free:
        raise DomainError("--seed-free is reserved: no random numbers are used anywhere")

    nu_list = None
    if args.nu is not None:
        items = [s for s in args.nu.split(",") if s.strip()]
        try:
            nu_list = tuple(FractionalOrder(float(s)) for s in items)
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"cannot parse --nu {args.nu!r}") from exc
        if not nu_list:
            raise DomainError("--nu is empty")

    series, quad = SeriesPolicy(), QuadPolicy()
    if args.tol is not None:
        if not args.tol > 0:
            raise DomainError("--tol must be positive")
        series = SeriesPolicy(rel_tol=args.tol)
        quad = QuadPolicy(abs_tol=args.tol, rel_tol=args.tol)

    return RunConfig(
        nu_list=nu_list,
        t_grid=Grid.parse(args.t_range, log=True) if args.t_range else None,
        x_grid=Grid.parse(args.x_range) if args.x_range else None,
        series=series,
        solver=SolverPolicy(),
        quad=quad,
        output_format=args.format,
        output_path=args.out,
    )


def _emit(table: FigureTable, config: RunConfig, stdout: TextIO) -> None:
    text = to_csv(table) if config.output_format == "csv" else to_json(table)
    if config.output_path is None:
        stdout.write(text)
        return
    path = Path(config.output_path)
    path.write_text(text, newline="")
    if config.output_format == "csv":
        path.with_name(path.name + ".meta.json").write_text(metadata_json(table))


def _flag_status(table: FigureTable) -> int:
    # failed points are kept as flagged rows; the exit code still reports them
    flags = table.columns["flag"]
    bad = np.flatnonzero(flags != FLAG_OK)
    if bad.size == 0:
        return EXIT_OK
    keys = [k for k in ("nu", "t", "x", "s") if k in table.columns]
    for i in bad[:10]:
        where = ", ".join(f"{k}={table.columns[k][i]:.6g}" for k in keys)
        kind = "domain error" if flags[i] == FLAG_DOMAIN else "no convergence"
        print(f"fracwave: {kind} at {where}", file=sys.stderr)
    if bad.size > 10:
        print(f"fracwave: ... {bad.size - 10} more flagged rows", file=sys.stderr)
    return EXIT_NONCONVERGENCE if np.any(flags == FLAG_NONCONVERGENCE) else EXIT_USAGE


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        config = _config(args)
        if any(nu > CONDITIONING_WARNING_NU for nu in config.nus()):
            print(f"fracwave: warning: orders above {CONDITIONING_WARNING_NU} are poorly "
                  "conditioned; check the error columns", file=sys.stderr)

        if args.command == "verify":
            return cmd_verify(config, stdout)
        if args.command == "figure":
            table = figure(args.figure_id, config)
        else:
            table = {"eval": cmd_eval, "extrema": cmd_extrema,
                     "moments": cmd_moments, "median": cmd_median}[args.command](config)
        _emit(table, config, stdout)
        return _flag_status(table)
    except DomainError as exc:
        print(f"fracwave: domain error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"fracwave: no convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    return EXIT_OK


# }}}


if __name__ == "__main__":
    sys.exit(main())
