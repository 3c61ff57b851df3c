import logging
import math
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence

import pandas as pd

from ..analytic import a_min
from ..distributions import ArrivalProcess, DistributionTemplate, make_distribution, normalize_kind, tail_lightness
from ..exceptions import ConfigError, NoFinitePointError
from ..simcore import PolicyConfig
from ..utils import point_seed
from .points import evaluate_point
from .sim_settings import SimSettings
from .tradeoff_point import TradeoffPoint

logger = logging.getLogger(__name__)


@dataclass
class SweepSpec:
    """A service family swept along its shape grid under several policies.

    The grid must be ordered toward the heavy tail limit: alpha decreasing
    for Pareto, sigma increasing for log-normal, kappa decreasing for
    Weibull. Kinds without shape use the grid [None].
    """
    arrival: ArrivalProcess
    family: str
    parameter_grid: List[Optional[float]]
    policies: List[PolicyConfig]
    mu: float
    settings: SimSettings = field(default_factory=SimSettings)

    def __post_init__(self):
        self.family = normalize_kind(self.family)
        if not self.parameter_grid:
            raise ConfigError("The `grid` must not be empty.", "grid")
        if not self.policies:
            raise ConfigError("At least one policy is needed.", "policies")
        lightness = [tail_lightness(self.family, shape) for shape in self.parameter_grid]
        if any(later >= earlier for earlier, later in zip(lightness[:-1], lightness[1:])):
            raise ConfigError(
                "The `grid` {} of the {} family must be ordered toward the heavy tail limit.".format(
                    self.parameter_grid, self.family
                ),
                "grid",
            )


def _age_key(point: TradeoffPoint) -> float:
    return -point.avg_age if point.avg_age is not None else math.inf


def sort_points(points: List[TradeoffPoint]) -> List[TradeoffPoint]:
    """By average age, descending; points without age last; ties keep their order."""
    return sorted(points, key=_age_key)


def point_settings(
    settings: SimSettings,
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    policy: PolicyConfig,
) -> SimSettings:
    """The settings of one point, seeded by `point_seed` from the base seed."""
    return replace(settings, seed=point_seed(settings.seed, arrival, service, policy))


def tradeoff_sweep(spec: SweepSpec) -> List[TradeoffPoint]:
    """Evaluate every (policy, shape) pair of the sweep.

    Each pair yields its analytic point where formulas exist and a simulated
    point when the settings ask for it or no formula exists. A failing point
    is kept with the error as status and the sweep goes on. Each point runs
    with its own seed derived from the base seed, recorded in its row.
    """
    points = []
    for policy in spec.policies:
        for shape in spec.parameter_grid:
            service = make_distribution(spec.family, spec.mu, shape)
            logger.info("Sweeping %s with %s.", policy.label, service)
            settings = point_settings(spec.settings, spec.arrival, service, policy)
            points.extend(evaluate_point(spec.arrival, service, policy, settings))
    return sort_points(points)


def tradeoff_sweeps(specs: Sequence[SweepSpec]) -> List[TradeoffPoint]:
    """Concatenate several sweeps, such as the families of one figure."""
    points = []
    for spec in specs:
        points.extend(tradeoff_sweep(spec))
    return sort_points(points)


CURVE_COLUMNS = ["lambda", "dist_kind", "dist_param", "avg_age", "age_stderr", "bound"]


def age_vs_rate_curves(
    family: str,
    parameters: Sequence[Optional[float]],
    lambdas: Sequence[float],
    mu: float,
    policy: PolicyConfig,
    settings: SimSettings = SimSettings(),
) -> pd.DataFrame:
    """Average age of Poisson generation against its rate lambda.

    Each row holds the age of one (lambda, shape) pair, analytic where a
    formula exists and simulated otherwise, and the minimum age bound 1/lambda.

    Raises
    ------
    ConfigError,
        If a rate is not positive, or not below M mu for the FCFS policies.
    """
    family = normalize_kind(family)
    for rate in lambdas:
        if rate <= 0 or (policy.is_fcfs and rate >= policy.n_servers * mu):
            raise ConfigError(
                "The rate {} of `lambdas` must lie in (0, {}) for the {} policy.".format(
                    rate, policy.n_servers * mu if policy.is_fcfs else math.inf, policy.label
                ),
                "lambdas",
            )
    rows = []
    for shape in parameters:
        service = make_distribution(family, mu, shape)
        for rate in lambdas:
            arrival = ArrivalProcess.poisson(rate)
            point = evaluate_point(
                arrival, service, policy, point_settings(settings, arrival, service, policy), simulate=False
            )[0]
            rows.append({
                "lambda": rate,
                "dist_kind": family,
                "dist_param": shape,
                "avg_age": point.avg_age,
                "age_stderr": point.age_stderr,
                "bound": a_min(arrival),
            })
    return pd.DataFrame(rows, columns=CURVE_COLUMNS)


def scalarized_search(
    arrival: ArrivalProcess,
    family: str,
    nu: float,
    policy: PolicyConfig,
    parameter_grid: Sequence[Optional[float]],
    mu: float,
    settings: SimSettings = SimSettings(),
) -> TradeoffPoint:
    """Return the grid point minimising avg_delay + nu * avg_age.

    Analytic values are used where available. Ties go to the lighter tail.

    Raises
    ------
    NoFinitePointError,
        If no point of the grid has a finite objective.
    """
    if nu < 0 or not math.isfinite(nu):
        raise ConfigError("The weight `nu` must be a nonnegative finite number, got {}.".format(nu), "nu")
    if not parameter_grid:
        raise ConfigError("The `grid` must not be empty.", "grid")
    family = normalize_kind(family)

    best, best_objective, best_lightness = None, math.inf, -math.inf
    for shape in parameter_grid:
        service = make_distribution(family, mu, shape)
        point = evaluate_point(
            arrival, service, policy, point_settings(settings, arrival, service, policy), simulate=False
        )[0]
        objective = point.objective(nu)
        logger.info("Objective of %s: %s", service, objective)
        if objective is None or not math.isfinite(objective):
            continue
        lightness = tail_lightness(family, shape)
        if objective < best_objective or (objective == best_objective and lightness > best_lightness):
            best, best_objective, best_lightness = point, objective, lightness

    if best is None:
        raise NoFinitePointError(
            "No point of the {} grid {} has a finite objective for nu = {}.".format(family, list(parameter_grid), nu)
        )
    return best
