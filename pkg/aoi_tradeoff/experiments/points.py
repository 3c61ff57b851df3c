"""Evaluation of single tradeoff points, analytically where a formula
exists and by simulation otherwise or in addition."""
import logging
import math
from typing import Optional

from ..analytic import gginf_age, lcfsp_age, mg1_lcfsp_delay
from ..cache import Cache, resolve_cache_dir
from ..distributions import ArrivalProcess, DistributionTemplate
from ..exceptions import AoiTradeoffException, InadmissibleParameterError, UnstableSystemError
from ..simcore import PolicyConfig, PolicyKind, SimResult, convergence_check, run_replications
from .sim_settings import SimSettings
from .tradeoff_point import OK, UNSTABLE, Source, TradeoffPoint

logger = logging.getLogger(__name__)


@Cache(
    cache_path="{cache_root}/{function_name}/{_hash}.json",
    args_to_ignore=("n_jobs",),
    use_source_code=True,
    encode=SimResult.to_dict,
    decode=SimResult.from_dict,
    enable_cache_arg_name="use_cache",
)
def cached_replications(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    policy: PolicyConfig,
    horizon: float,
    warmup: float,
    n_reps: int,
    base_seed: int,
    cache_root: str,
    n_jobs: int = 1,
) -> SimResult:
    """`run_replications` memoised under `cache_root`."""
    return run_replications(
        arrival, service, policy, horizon,
        warmup=warmup, n_reps=n_reps, base_seed=base_seed, n_jobs=n_jobs
    )


def error_status(error: Exception) -> str:
    return "error: {}: {}".format(error.__class__.__name__, error)


def failed_point(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    policy: PolicyConfig,
    source: Source,
    error: Exception,
    settings: Optional[SimSettings] = None,
) -> TradeoffPoint:
    logger.info("The %s point of %s with %s failed: %s", source.value, policy.label, service, error)
    return TradeoffPoint(
        policy, service, arrival,
        avg_age=None, avg_delay=None, delay_var=None, source=source,
        seed=settings.seed if settings is not None else None,
        horizon=settings.horizon if settings is not None and source is Source.SIMULATED else None,
        status=error_status(error),
    )


def analytic_point(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    policy: PolicyConfig,
    settings: SimSettings = SimSettings(),
) -> Optional[TradeoffPoint]:
    """Return the formula values of the point, None for the FCFS policies
    which have no age formula.

    LCFS preemptive: the G/G/1 age formula, the M/G/1 delay formula (Poisson
    generation only) and the service variance as delay variance floor.
    Infinite server: the G/G/infinity age with its Monte Carlo standard
    error, delay 1/mu and delay variance Var(S), both exact.
    """
    if policy.kind is PolicyKind.LCFSP_SINGLE:
        age = lcfsp_age(arrival, service)
        status = OK
        try:
            delay = mg1_lcfsp_delay(arrival, service)
        except UnstableSystemError:
            delay, status = math.inf, UNSTABLE
        except InadmissibleParameterError:
            delay = None
        return TradeoffPoint(
            policy, service, arrival,
            avg_age=age, avg_delay=delay, delay_var=service.variance(),
            source=Source.ANALYTIC, status=status,
        )
    if policy.kind is PolicyKind.INFINITE_SERVER:
        age, estimate = gginf_age(
            arrival, service, n_paths=settings.n_paths, seed=settings.seed, n_jobs=settings.n_jobs
        )
        return TradeoffPoint(
            policy, service, arrival,
            avg_age=age, avg_delay=service.mean(), delay_var=service.variance(),
            source=Source.ANALYTIC, age_stderr=estimate.std_error, delay_stderr=0.0,
            seed=settings.seed,
        )
    return None


def simulate_replications(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    policy: PolicyConfig,
    settings: SimSettings,
) -> SimResult:
    return cached_replications(
        arrival, service, policy, settings.horizon, settings.warmup, settings.reps, settings.seed,
        cache_root=resolve_cache_dir(settings.cache_dir),
        n_jobs=settings.n_jobs,
        use_cache=settings.use_cache,
    )


def simulated_point(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    policy: PolicyConfig,
    settings: SimSettings,
) -> TradeoffPoint:
    """Simulate the point; when E[S^2] diverges the same seed is also rerun
    at doubling horizons and the point is labelled non-convergent if its
    delay statistics keep moving."""
    result = simulate_replications(arrival, service, policy, settings)
    status = OK
    if policy.is_fcfs and arrival.rate >= policy.n_servers * service.mu:
        status = UNSTABLE
    elif math.isinf(service.second_moment()):
        report = convergence_check(
            arrival, service, policy,
            settings.first_convergence_horizon,
            warmup=min(settings.warmup, 0.5 * settings.first_convergence_horizon),
            seed=settings.seed,
        )
        status = report.status
    return TradeoffPoint(
        policy, service, arrival,
        avg_age=result.avg_age,
        avg_delay=result.avg_delay,
        delay_var=result.delay_var,
        source=Source.SIMULATED,
        age_stderr=result.age_stderr,
        delay_stderr=result.delay_stderr,
        seed=settings.seed,
        horizon=settings.horizon,
        status=status,
    )


def evaluate_point(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    policy: PolicyConfig,
    settings: SimSettings,
    simulate: Optional[bool] = None,
) -> list:
    """The analytic point, if any, and the simulated one, if requested or if
    there is no formula. Failures become rows with the error as status."""
    points = []
    try:
        point = analytic_point(arrival, service, policy, settings)
    except AoiTradeoffException as error:
        points.append(failed_point(arrival, service, policy, Source.ANALYTIC, error))
    else:
        if point is not None:
            points.append(point)

    simulate = settings.simulate if simulate is None else simulate
    if simulate or not points:
        try:
            points.append(simulated_point(arrival, service, policy, settings))
        except AoiTradeoffException as error:
            points.append(failed_point(arrival, service, policy, Source.SIMULATED, error, settings))
    return points
