"""Numeric checks of the heavy tail conditions under which the average age
approaches its minimum: along a shape sequence both P(S > x) and
E[S 1{S <= x}] must vanish for every x > 0, and so must the min-term of the
infinite server age."""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Union

import numpy as np

from ..distributions import ArrivalProcess, make_distribution, normalize_kind
from .age import DEFAULT_N_PATHS, MinTermEstimate, estimate_min_term

logger = logging.getLogger(__name__)

DEFAULT_X_GRID = (0.1, 0.5, 1.0, 5.0)
DEFAULT_THRESHOLD = 0.05


@dataclass(frozen=True)
class ConditionRow:
    shape: Optional[float]
    x: float
    tail: float
    truncated_mean: float


@dataclass
class SufficientConditionReport:
    kind: str
    mu: float
    shapes: List[Optional[float]]
    x_grid: List[float]
    threshold: float
    rows: List[ConditionRow] = field(default_factory=list)

    def final_rows(self) -> List[ConditionRow]:
        """The rows of the last, heaviest, shape."""
        return self.rows[-len(self.x_grid):]

    @property
    def tail_condition(self) -> bool:
        return all(row.tail < self.threshold for row in self.final_rows())

    @property
    def truncated_mean_condition(self) -> bool:
        return all(row.truncated_mean < self.threshold for row in self.final_rows())

    @property
    def holds(self) -> bool:
        return self.tail_condition and self.truncated_mean_condition

    def column(self, x: float, name: str) -> List[float]:
        """Values of `name` (tail or truncated_mean) at `x` along the shapes."""
        return [getattr(row, name) for row in self.rows if row.x == x]

    def is_decreasing(self, x: float, name: str) -> bool:
        values = self.column(x, name)
        return all(later <= earlier for earlier, later in zip(values[:-1], values[1:]))


@dataclass
class MinTermWitness:
    """Min-term estimates along a shape sequence next to the tail conditions,
    which hold exactly when the min-term vanishes."""
    conditions: SufficientConditionReport
    estimates: List[MinTermEstimate]
    threshold: float

    @property
    def min_term_vanishes(self) -> bool:
        return self.estimates[-1].value < self.threshold

    @property
    def consistent(self) -> bool:
        return self.min_term_vanishes == self.conditions.holds


def _as_shapes(shapes: Union[None, float, Sequence[Optional[float]]]) -> List[Optional[float]]:
    if shapes is None:
        return [None]
    if isinstance(shapes, (int, float)):
        return [float(shapes)]
    return list(shapes)


def check_suff_conditions(
    kind: str,
    shapes: Union[None, float, Sequence[Optional[float]]],
    x_grid: Sequence[float] = DEFAULT_X_GRID,
    mu: float = 1.0,
    threshold: float = DEFAULT_THRESHOLD,
) -> SufficientConditionReport:
    """Tabulate tail(x) and truncated_mean(x) along a shape sequence.

    Arguments
    ---------
    kind: str,
        The distribution family.
    shapes: Union[None, float, Sequence[Optional[float]]],
        The shape sequence ordered toward the heavy tail limit; `None` for
        the kinds without shape, which form a single point sequence.
    x_grid: Sequence[float] = (0.1, 0.5, 1.0, 5.0),
        The positive points where the conditions are evaluated.
    mu: float = 1.0,
        The service rate shared by the sequence.
    threshold: float = 0.05,
        The conditions hold when every value of the last shape is below it.
    """
    kind = normalize_kind(kind)
    shapes = _as_shapes(shapes)
    if not shapes:
        raise ValueError("The shape sequence must not be empty.")
    report = SufficientConditionReport(kind, mu, shapes, list(x_grid), threshold)
    for shape in shapes:
        distribution = make_distribution(kind, mu, shape)
        for x in x_grid:
            report.rows.append(ConditionRow(
                shape,
                x,
                distribution.tail(x),
                distribution.truncated_mean(x),
            ))
    return report


def min_term_to_zero_witness(
    arrival: ArrivalProcess,
    kind: str,
    shapes: Union[None, float, Sequence[Optional[float]]],
    mu: float = 1.0,
    n_paths: int = DEFAULT_N_PATHS,
    seed: int = 0,
    x_grid: Sequence[float] = DEFAULT_X_GRID,
    threshold: float = DEFAULT_THRESHOLD,
) -> MinTermWitness:
    """Estimate the min-term along the shape sequence and pair it with
    `check_suff_conditions` on the same sequence."""
    shapes = _as_shapes(shapes)
    conditions = check_suff_conditions(kind, shapes, x_grid, mu=mu, threshold=threshold)
    streams = np.random.SeedSequence(seed).spawn(len(shapes))
    estimates = []
    for shape, stream in zip(shapes, streams):
        estimate = estimate_min_term(arrival, make_distribution(kind, mu, shape), n_paths=n_paths, seed=stream)
        logger.debug("Min-term for %s shape %s: %s", kind, shape, estimate)
        estimates.append(estimate)
    return MinTermWitness(conditions, estimates, threshold)
