"""Columnar result tables shared by the profile generator and the CLI."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

import numpy as np


class FigureId(enum.Enum):
    GREEN_PROFILES = "GreenProfiles"
    MAX_VELOCITY_CAUCHY = "MaxVelocityCauchy"
    MAX_HYPERBOLA_CAUCHY = "MaxHyperbolaCauchy"
    MAX_LOC_VAL_PROD_CAUCHY = "MaxLocValProdCauchy"
    MAX_VELOCITY_SIGNALING = "MaxVelocitySignaling"
    MAX_LOC_VAL_SIGNALING = "MaxLocValSignaling"
    GRAVITY_CAUCHY = "GravityCauchy"
    GRAVITY_SIGNALING = "GravitySignaling"
    MEDIAN_TABLE = "MedianTable"
    EVAL = "Eval"
    EXTREMA = "Extrema"
    MOMENTS = "Moments"


#: flag values stored in the ``flag`` column of a table
FLAG_OK = 0
FLAG_DOMAIN = 1
FLAG_NONCONVERGENCE = 2


@dataclass
class FigureTable:
    """Named, equal-length columns plus reproducibility metadata.

    .. attribute:: units

        Unit label per column (``"1"`` for dimensionless quantities).

    .. attribute:: closed_form

        Names of columns computed from closed-form expressions; these carry
        no sibling error column.
    """

    figure_id: FigureId
    columns: dict[str, np.ndarray]
    units: dict[str, str] = field(default_factory=dict)
    metadata: dict[str, Any] = field(default_factory=dict)
    closed_form: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        self.columns = {k: np.asarray(v) for k, v in self.columns.items()}
        lengths = {v.shape for v in self.columns.values()}
        if len(lengths) > 1:
            raise ValueError(f"columns have different shapes: {sorted(lengths)}")
        if any(v.ndim != 1 for v in self.columns.values()):
            raise ValueError("columns must be one-dimensional")
        missing = set(self.units) - set(self.columns)
        if missing:
            raise ValueError(f"units given for unknown columns: {sorted(missing)}")

    @property
    def nrows(self) -> int:
        return next(iter(self.columns.values())).size if self.columns else 0

    def __getitem__(self, name: str) -> np.ndarray:
        return self.columns[name]
