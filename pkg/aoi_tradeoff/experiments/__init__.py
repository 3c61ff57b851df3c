from .points import analytic_point, cached_replications, evaluate_point, simulate_replications, simulated_point
from .sim_settings import SimSettings
from .sweep import (
    CURVE_COLUMNS,
    SweepSpec,
    age_vs_rate_curves,
    scalarized_search,
    sort_points,
    tradeoff_sweep,
    tradeoff_sweeps,
)
from .tradeoff_point import CSV_COLUMNS, NON_CONVERGENT, OK, UNSTABLE, Source, TradeoffPoint
from .validation import ValidationReport, ValidationRow, validate

__all__ = [
    "analytic_point",
    "cached_replications",
    "evaluate_point",
    "simulate_replications",
    "simulated_point",
    "SimSettings",
    "CURVE_COLUMNS",
    "SweepSpec",
    "age_vs_rate_curves",
    "scalarized_search",
    "sort_points",
    "tradeoff_sweep",
    "tradeoff_sweeps",
    "CSV_COLUMNS",
    "NON_CONVERGENT",
    "OK",
    "UNSTABLE",
    "Source",
    "TradeoffPoint",
    "ValidationReport",
    "ValidationRow",
    "validate",
]
