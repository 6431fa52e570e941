"""Data behind the figures: generators producing :class:`FigureTable` objects
and deterministic CSV/JSON serializers."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

import numpy as np

from fracwave.errors import ConvergenceError, DomainError
from fracwave.extrema import (
    SolverPolicy,
    max_location_cauchy,
    max_location_cauchy_with_limits,
    max_location_signaling,
)
from fracwave.green_functions import green_cauchy, green_signaling
from fracwave.moments import (
    MEDIAN_WAVE_LIMIT,
    gravity_cauchy_coefficient,
    gravity_signaling_coefficient,
    gravity_velocity_cauchy,
    gravity_velocity_signaling,
    median_coefficient,
)
from fracwave.quadrature import QuadPolicy
from fracwave.special_functions import (
    FractionalOrder,
    SeriesPolicy,
    mainardi_m,
)
from fracwave.tables import (
    FLAG_DOMAIN,
    FLAG_NONCONVERGENCE,
    FLAG_OK,
    FigureId,
    FigureTable,
)

SCHEMA_VERSION = "1.0"
ARTIFACT_VERSION = "0.1.0"

DEFAULT_NU = (0.5, 0.625, 0.75, 0.875, 0.95)
#: orders used for the gravity curves, which are regular up to nu = 1
DEFAULT_GRAVITY_NU = tuple(float(v) for v in np.linspace(0.5, 1.0, 21))

# {{{ configuration


@dataclass(frozen=True)
class Grid:
    """``points`` values from ``lo`` to ``hi``; geometric spacing if *log*."""

    lo: float
    hi: float
    points: int
    log: bool = False

    def __post_init__(self) -> None:
        if self.points < 1:
            raise DomainError("grids must contain at least one point")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)) or self.hi < self.lo:
            raise DomainError(f"invalid grid range {self.lo!r}:{self.hi!r}")
        if self.log and not self.lo > 0:
            raise DomainError("logarithmic grids require a positive lower end")

    def values(self) -> np.ndarray:
        if self.points == 1:
            return np.array([float(self.lo)])
        if self.log:
            return np.geomspace(self.lo, self.hi, self.points)
        return np.linspace(self.lo, self.hi, self.points)

    @classmethod
    def parse(cls, text: str, *, log: bool = False) -> Grid:
        parts = text.split(":")
        if len(parts) != 3:
            raise DomainError(f"expected 'min:max:n', got {text!r}")
        try:
            lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise DomainError(f"cannot parse range {text!r}") from exc
        return cls(lo, hi, n, log)


@dataclass(frozen=True)
class RunConfig:
    nu_list: tuple[FractionalOrder, ...] | None = None
    t_grid: Grid | None = None
    x_grid: Grid | None = None
    series: SeriesPolicy = field(default_factory=SeriesPolicy)
    solver: SolverPolicy = field(default_factory=SolverPolicy)
    quad: QuadPolicy = field(default_factory=QuadPolicy)
    output_format: str = "csv"
    output_path: str | None = None

    def __post_init__(self) -> None:
        if self.nu_list is not None and len(self.nu_list) == 0:
            raise DomainError("the nu list is empty")
        if self.t_grid is not None and not self.t_grid.lo > 0:
            raise DomainError("time grid must start at t > 0")
        if self.output_format not in ("csv", "json"):
            raise DomainError(f"unknown output format {self.output_format!r}")

    def nus(self, default: tuple[float, ...] = DEFAULT_NU) -> list[float]:
        if self.nu_list is None:
            return [FractionalOrder(v).nu for v in default]
        return [v.nu for v in self.nu_list]

    def times(self, default: Grid) -> np.ndarray:
        return (self.t_grid or default).values()

    def positions(self, default: Grid) -> np.ndarray:
        return (self.x_grid or default).values()

    def metadata(self) -> dict[str, Any]:
        return {
            "artifact_version": ARTIFACT_VERSION,
            "tolerances": {
                "series": asdict(self.series),
                "solver": asdict(self.solver),
                "quadrature": asdict(self.quad),
            },
        }


DEFAULT_T = Grid(0.1, 10.0, 25, log=True)
DEFAULT_X = Grid(0.05, 5.0, 100)

# }}}


# {{{ table assembly


#: exact inputs of a row; they carry no error column
COORDINATE_COLUMNS = ("nu", "s", "t", "x", "r")


class _Rows:
    """Row-wise accumulator turning per-point failures into flagged rows."""

    def __init__(self, names: list[str]) -> None:
        self.names = names
        self.rows: list[dict[str, Any]] = []

    def add(self, keys: dict[str, Any], compute: Callable[[], dict[str, float]]) -> None:
        row = dict(keys)
        try:
            row.update(compute())
            row["flag"] = FLAG_OK
        except DomainError:
            row["flag"] = FLAG_DOMAIN
        except ConvergenceError:
            row["flag"] = FLAG_NONCONVERGENCE
        self.rows.append(row)

    def columns(self) -> dict[str, np.ndarray]:
        out = {}
        for name in [*self.names, "flag"]:
            values = [row.get(name, math.nan) for row in self.rows]
            if name == "flag":
                out[name] = np.array(values, dtype=int)
            elif any(isinstance(v, str) for v in values):
                out[name] = np.array(values, dtype=object)
            else:
                out[name] = np.array(values, dtype=float)
        return out


def _table(
    fid: FigureId,
    rows: _Rows,
    units: dict[str, str],
    config: RunConfig,
    closed_form: tuple[str, ...] = (),
    diagnostic: tuple[str, ...] = (),
    **extra: Any,
) -> FigureTable:
    # every numeric column is a grid coordinate, has a sibling *_err column,
    # or is listed as closed form or as a diagnostic (itself an error measure)
    meta = config.metadata()
    meta.update(extra)
    meta["figure_id"] = fid.value
    meta["coordinate_columns"] = [n for n in COORDINATE_COLUMNS if n in rows.names]
    meta["closed_form_columns"] = list(closed_form)
    meta["diagnostic_columns"] = list(diagnostic)
    return FigureTable(
        figure_id=fid,
        columns=rows.columns(),
        units={**units, "flag": "1"},
        metadata=meta,
        closed_form=closed_form,
    )


# }}}


# {{{ figure generators


def green_profiles(config: RunConfig) -> FigureTable:
    nus = config.nus()
    ts = config.times(Grid(1.0, 1.0, 1))
    xs = config.positions(DEFAULT_X)
    rows = _Rows(["nu", "t", "x", "G_c", "G_c_err", "G_s", "G_s_err"])
    for nu in nus:
        for t in ts:
            for x in xs:
                def compute(nu: float = nu, t: float = t, x: float = x) -> dict[str, float]:
                    gc = green_cauchy(x, t, nu, config.series)
                    gs = green_signaling(x, t, nu, config.series)
                    return {
                        "G_c": gc.value, "G_c_err": gc.abs_err_estimate,
                        "G_s": gs.value, "G_s_err": gs.abs_err_estimate,
                    }

                rows.add({"nu": nu, "t": float(t), "x": float(x)}, compute)
    units = {"nu": "1", "t": "time", "x": "length", "G_c": "1/length",
             "G_c_err": "1/length", "G_s": "1/time", "G_s_err": "1/time"}
    return _table(FigureId.GREEN_PROFILES, rows, units, config,
                  nu_grid=nus, t_grid=ts.tolist(), x_grid=xs.tolist())


def _location_err(config: RunConfig) -> float:
    return config.solver.location_tol


def max_velocity_cauchy(config: RunConfig) -> FigureTable:
    nus, ts = config.nus(), config.times(DEFAULT_T)
    rows = _Rows(["nu", "t", "V_c", "V_c_err"])
    for nu in nus:
        for t in ts:
            def compute(nu: float = nu, t: float = t) -> dict[str, float]:
                c = max_location_cauchy_with_limits(nu, config.solver, config.series)
                interior = 0.5 < nu < 1.0
                scale = nu * t ** (nu - 1.0)
                return {"V_c": scale * c,
                        "V_c_err": scale * _location_err(config) if interior else 0.0}

            rows.add({"nu": nu, "t": float(t)}, compute)
    units = {"nu": "1", "t": "time", "V_c": "length/time", "V_c_err": "length/time"}
    return _table(FigureId.MAX_VELOCITY_CAUCHY, rows, units, config,
                  nu_grid=nus, t_grid=ts.tolist())


def _cauchy_peak(nu: float, config: RunConfig) -> tuple[float, float, float, float]:
    """``(c, c_err, m, m_err)`` including the diffusion limit."""
    if nu == 0.5:
        m = mainardi_m(nu, 0.0, config.series)
        return 0.0, 0.0, 0.5 * m.value, 0.5 * m.abs_err_estimate
    rec = max_location_cauchy(nu, config.solver, config.series)
    m = mainardi_m(nu, rec.location, config.series)
    return rec.location, _location_err(config), 0.5 * rec.value, 0.5 * m.abs_err_estimate


def max_hyperbola_cauchy(config: RunConfig) -> FigureTable:
    nus, ts = config.nus(), config.times(DEFAULT_T)
    rows = _Rows(["nu", "t", "x_star", "x_star_err", "G_star", "G_star_err", "product", "product_err"])
    for nu in nus:
        for t in ts:
            def compute(nu: float = nu, t: float = t) -> dict[str, float]:
                c, c_err, m, m_err = _cauchy_peak(nu, config)
                x, g = c * t**nu, m * t ** (-nu)
                return {
                    "x_star": x, "x_star_err": c_err * t**nu,
                    "G_star": g, "G_star_err": m_err * t ** (-nu),
                    "product": x * g, "product_err": c_err * m + c * m_err,
                }

            rows.add({"nu": nu, "t": float(t)}, compute)
    units = {"nu": "1", "t": "time", "x_star": "length", "x_star_err": "length",
             "G_star": "1/length", "G_star_err": "1/length", "product": "1", "product_err": "1"}
    return _table(FigureId.MAX_HYPERBOLA_CAUCHY, rows, units, config,
                  nu_grid=nus, t_grid=ts.tolist())


def max_loc_val_prod_cauchy(config: RunConfig) -> FigureTable:
    nus = config.nus()
    rows = _Rows(["nu", "c_nu", "c_nu_err", "m_nu", "m_nu_err", "product", "product_err"])
    for nu in nus:
        def compute(nu: float = nu) -> dict[str, float]:
            c, c_err, m, m_err = _cauchy_peak(nu, config)
            return {"c_nu": c, "c_nu_err": c_err, "m_nu": m, "m_nu_err": m_err,
                    "product": c * m, "product_err": c_err * m + c * m_err}

        rows.add({"nu": nu}, compute)
    units = {"nu": "1", "c_nu": "1", "c_nu_err": "1", "m_nu": "1", "m_nu_err": "1",
             "product": "1", "product_err": "1"}
    return _table(FigureId.MAX_LOC_VAL_PROD_CAUCHY, rows, units, config, nu_grid=nus)


def max_velocity_signaling(config: RunConfig) -> FigureTable:
    nus, ts = config.nus(), config.times(DEFAULT_T)
    rows = _Rows(["nu", "t", "V_s", "V_s_err"])
    for nu in nus:
        for t in ts:
            def compute(nu: float = nu, t: float = t) -> dict[str, float]:
                d = max_location_signaling(nu, config.solver, config.series).location
                scale = nu * t ** (nu - 1.0)
                return {"V_s": scale * d, "V_s_err": scale * _location_err(config)}

            rows.add({"nu": nu, "t": float(t)}, compute)
    units = {"nu": "1", "t": "time", "V_s": "length/time", "V_s_err": "length/time"}
    return _table(FigureId.MAX_VELOCITY_SIGNALING, rows, units, config,
                  nu_grid=nus, t_grid=ts.tolist())


def max_loc_val_signaling(config: RunConfig) -> FigureTable:
    nus, ts = config.nus(), config.times(DEFAULT_T)
    names = ["nu", "t", "d_nu", "d_nu_err", "n_nu", "n_nu_err",
             "x_star", "x_star_err", "G_star", "G_star_err", "product", "product_err"]
    rows = _Rows(names)
    for nu in nus:
        for t in ts:
            def compute(nu: float = nu, t: float = t) -> dict[str, float]:
                rec = max_location_signaling(nu, config.solver, config.series)
                m = mainardi_m(nu, rec.location, config.series)
                d, n = rec.location, rec.value
                d_err, n_err = _location_err(config), nu * d * m.abs_err_estimate
                return {
                    "d_nu": d, "d_nu_err": d_err, "n_nu": n, "n_nu_err": n_err,
                    "x_star": d * t**nu, "x_star_err": d_err * t**nu,
                    "G_star": n / t, "G_star_err": n_err / t,
                    "product": d * n * t ** (nu - 1.0),
                    "product_err": (d_err * n + d * n_err) * t ** (nu - 1.0),
                }

            rows.add({"nu": nu, "t": float(t)}, compute)
    units = {"nu": "1", "t": "time", "d_nu": "1", "d_nu_err": "1", "n_nu": "1", "n_nu_err": "1",
             "x_star": "length", "x_star_err": "length", "G_star": "1/time",
             "G_star_err": "1/time", "product": "length/time",
             "product_err": "length/time"}
    return _table(FigureId.MAX_LOC_VAL_SIGNALING, rows, units, config,
                  nu_grid=nus, t_grid=ts.tolist())


def _gravity(fid: FigureId, config: RunConfig) -> FigureTable:
    nus, ts = config.nus(DEFAULT_GRAVITY_NU), config.times(DEFAULT_T)
    if fid is FigureId.GRAVITY_CAUCHY:
        coefficient, velocity, tag = gravity_cauchy_coefficient, gravity_velocity_cauchy, "c"
    else:
        coefficient, velocity, tag = gravity_signaling_coefficient, gravity_velocity_signaling, "s"
    names = ["nu", "t", f"g_{tag}", f"r_{tag}", f"V_{tag}_g"]
    rows = _Rows(names)
    for nu in nus:
        for t in ts:
            def compute(nu: float = nu, t: float = t) -> dict[str, float]:
                g = coefficient(nu)
                return {f"g_{tag}": g, f"r_{tag}": g * t**nu, f"V_{tag}_g": velocity(t, nu)}

            rows.add({"nu": nu, "t": float(t)}, compute)
    units = {"nu": "1", "t": "time", f"g_{tag}": "1", f"r_{tag}": "length",
             f"V_{tag}_g": "length/time"}
    return _table(fid, rows, units, config, closed_form=tuple(names[2:]),
                  nu_grid=nus, t_grid=ts.tolist())


def gravity_cauchy_figure(config: RunConfig) -> FigureTable:
    return _gravity(FigureId.GRAVITY_CAUCHY, config)


def gravity_signaling_figure(config: RunConfig) -> FigureTable:
    return _gravity(FigureId.GRAVITY_SIGNALING, config)


def median_table(config: RunConfig) -> FigureTable:
    nus = config.nus()
    names = ["nu", "m_c", "m_c_err", "m_s", "m_s_err", "residual", "c_nu", "c_nu_err", "g_c"]
    rows = _Rows(names)
    for nu in nus:
        def compute(nu: float = nu) -> dict[str, float]:
            g_c = gravity_cauchy_coefficient(nu)
            c = max_location_cauchy_with_limits(nu, config.solver, config.series)
            c_err = _location_err(config) if 0.5 < nu < 1.0 else 0.0
            if nu == 1.0:
                return {"m_c": MEDIAN_WAVE_LIMIT, "m_c_err": 0.0, "m_s": MEDIAN_WAVE_LIMIT,
                        "m_s_err": 0.0, "residual": 0.0, "c_nu": c, "c_nu_err": c_err,
                        "g_c": g_c}
            rec = median_coefficient(nu, config.solver, config.series)
            # |C'(m_c)| = M(m_c) converts the residual into a location error
            slope = mainardi_m(nu, rec.m_c, config.series).value
            err = 2.0 * abs(rec.residual) / slope + 1.0e-12 * rec.m_c
            return {"m_c": rec.m_c, "m_c_err": err, "m_s": rec.m_s,
                    "m_s_err": rec.m_s * err / (nu * rec.m_c),
                    "residual": rec.residual, "c_nu": c, "c_nu_err": c_err, "g_c": g_c}

        rows.add({"nu": nu}, compute)
    units = dict.fromkeys(names, "1")
    return _table(FigureId.MEDIAN_TABLE, rows, units, config, closed_form=("g_c",),
                  diagnostic=("residual",), nu_grid=nus)


GENERATORS: dict[FigureId, Callable[[RunConfig], FigureTable]] = {
    FigureId.GREEN_PROFILES: green_profiles,
    FigureId.MAX_VELOCITY_CAUCHY: max_velocity_cauchy,
    FigureId.MAX_HYPERBOLA_CAUCHY: max_hyperbola_cauchy,
    FigureId.MAX_LOC_VAL_PROD_CAUCHY: max_loc_val_prod_cauchy,
    FigureId.MAX_VELOCITY_SIGNALING: max_velocity_signaling,
    FigureId.MAX_LOC_VAL_SIGNALING: max_loc_val_signaling,
    FigureId.GRAVITY_CAUCHY: gravity_cauchy_figure,
    FigureId.GRAVITY_SIGNALING: gravity_signaling_figure,
    FigureId.MEDIAN_TABLE: median_table,
}

FIGURE_IDS = tuple(fid.value for fid in GENERATORS)


def figure(figure_id: FigureId | str, config: RunConfig | None = None) -> FigureTable:
    try:
        fid = FigureId(figure_id)
    except ValueError as exc:
        raise DomainError(f"unknown figure id {figure_id!r}; expected one of {FIGURE_IDS}") from exc
    if fid not in GENERATORS:
        raise DomainError(f"{fid.value!r} is not a figure id")
    return GENERATORS[fid](config or RunConfig())


# }}}


# {{{ serialization

JSON_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "figure_id", "metadata", "units", "columns"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "figure_id": {"type": "string"},
        "metadata": {
            "type": "object",
            "required": ["artifact_version", "tolerances", "closed_form_columns"],
        },
        "units": {"type": "object", "additionalProperties": {"type": "string"}},
        "columns": {
            "type": "object",
            "minProperties": 1,
            "additionalProperties": {
                "type": "array",
                "items": {"type": ["number", "string", "null"]},
            },
        },
    },
}


def _format(value: Any) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, str):
        return value
    return "%.17g" % float(value)


def to_csv(table: FigureTable) -> str:
    names = list(table.columns)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow([f"{n} [{table.units.get(n, '1')}]" for n in names])
    for i in range(table.nrows):
        writer.writerow([_format(table.columns[n][i]) for n in names])
    return buf.getvalue()


def _json_value(value: Any) -> Any:
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, str):
        return value
    v = float(value)
    return v if math.isfinite(v) else None


def _json_meta(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _json_meta(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_meta(v) for v in value]
    if isinstance(value, (float, np.floating)):
        return _json_value(value)
    if isinstance(value, np.integer):
        return int(value)
    return value


def to_json_obj(table: FigureTable) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "figure_id": table.figure_id.value,
        "metadata": _json_meta(table.metadata),
        "units": dict(table.units),
        "columns": {n: [_json_value(v) for v in col] for n, col in table.columns.items()},
    }


def to_json(table: FigureTable) -> str:
    return json.dumps(to_json_obj(table), indent=1, sort_keys=False) + "\n"


def metadata_json(table: FigureTable) -> str:
    obj = {
        "schema_version": SCHEMA_VERSION,
        "figure_id": table.figure_id.value,
        "metadata": _json_meta(table.metadata),
        "units": dict(table.units),
    }
    return json.dumps(obj, indent=1) + "\n"


# }}}


__all__ = [
    "DEFAULT_NU",
    "FIGURE_IDS",
    "JSON_SCHEMA",
    "Grid",
    "RunConfig",
    "figure",
    "metadata_json",
    "to_csv",
    "to_json",
    "to_json_obj",
]
