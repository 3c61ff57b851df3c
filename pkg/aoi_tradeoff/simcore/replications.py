import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import List, Optional, Tuple

from ..distributions import ArrivalProcess, DistributionTemplate
from ..exceptions import AoiTradeoffException, ReplicationError
from ..utils import RunningStats, replication_seeds
from .policy import PolicyConfig
from .sim_result import SimResult
from .simulator import MAX_EVENTS, run

logger = logging.getLogger(__name__)

# Relative move between successive horizon doublings above which an
# estimate is labelled non-convergent.
CONVERGENCE_TOLERANCE = 0.05


def _run_replication(job: Tuple) -> SimResult:
    arrival, service, policy, horizon, warmup, seed, max_events = job
    try:
        return run(arrival, service, policy, horizon, warmup=warmup, seed=seed, max_events=max_events)
    except AoiTradeoffException as error:
        raise ReplicationError(
            "The replication with seed {} failed: {}".format(seed, error),
            seed,
        ) from error


def aggregate(results: List[SimResult]) -> SimResult:
    """Merge replications: means of the per replication averages with their
    standard errors, pooled delay statistics."""
    if not results:
        raise ValueError("There are no replications to aggregate.")
    if len(results) == 1:
        return results[0]
    ages = RunningStats()
    delay_means = RunningStats()
    delays = RunningStats()
    for result in results:
        ages.push(result.avg_age)
        delays = delays.merge(result.delay_stats())
        if result.avg_delay is not None:
            delay_means.push(result.avg_delay)
    first = results[0]
    return SimResult(
        avg_age=ages.mean,
        avg_delay=delays.mean if delays.count else None,
        delay_var=delays.variance if delays.count else None,
        n_delivered=sum(result.n_delivered for result in results),
        n_informative=sum(result.n_informative for result in results),
        age_stderr=ages.std_error,
        delay_stderr=delay_means.std_error,
        horizon=first.horizon,
        seed=first.seed,
        warmup=first.warmup,
        n_generated=sum(result.n_generated for result in results),
        n_completed=sum(result.n_completed for result in results),
        n_in_system=sum(result.n_in_system for result in results),
        age_area=sum(result.age_area for result in results),
        n_events=sum(result.n_events for result in results),
        n_reps=sum(result.n_reps for result in results),
    )


def run_replications(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    policy: PolicyConfig,
    horizon: float,
    warmup: Optional[float] = None,
    n_reps: int = 8,
    base_seed: int = 0,
    n_jobs: int = 1,
    max_events: int = MAX_EVENTS,
) -> SimResult:
    """Run `n_reps` independent replications, seeded by `replication_seeds`,
    and aggregate them. The merged result carries `base_seed`.

    With `n_jobs` > 1 the replications run in a process pool; the result is
    the same as a sequential run since the merge follows replication order.

    Raises
    ------
    ReplicationError,
        Carrying the seed of the first failing replication.
    """
    if n_reps < 1:
        raise ValueError("The number of replications must be positive, got {}.".format(n_reps))
    jobs = [
        (arrival, service, policy, horizon, warmup, seed, max_events)
        for seed in replication_seeds(base_seed, n_reps)
    ]
    logger.debug("Running %d replications of %s with %d jobs.", n_reps, policy.label, n_jobs)
    if n_jobs > 1 and n_reps > 1:
        with ProcessPoolExecutor(max_workers=min(n_jobs, n_reps)) as executor:
            results = list(executor.map(_run_replication, jobs))
    else:
        results = [_run_replication(job) for job in jobs]
    return replace(aggregate(results), seed=base_seed)


@dataclass(frozen=True)
class ConvergenceReport:
    """Estimates of one seed at horizons H, 2H, 4H with a fixed warmup."""
    horizons: List[float]
    results: List[SimResult]
    tolerance: float = CONVERGENCE_TOLERANCE

    @staticmethod
    def _moves(values: List[Optional[float]]) -> List[float]:
        moves = []
        for previous, current in zip(values[:-1], values[1:]):
            if previous is None or current is None:
                moves.append(math.inf)
            elif previous == current:
                moves.append(0.0)
            else:
                moves.append(abs(current - previous) / max(abs(previous), abs(current)))
        return moves

    @property
    def delay_moves(self) -> List[float]:
        return self._moves([result.avg_delay for result in self.results])

    @property
    def delay_var_moves(self) -> List[float]:
        return self._moves([result.delay_var for result in self.results])

    @property
    def converged(self) -> bool:
        return all(move <= self.tolerance for move in self.delay_moves + self.delay_var_moves)

    @property
    def status(self) -> str:
        return "ok" if self.converged else "non-convergent"


def convergence_check(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    policy: PolicyConfig,
    horizon: float,
    warmup: Optional[float] = None,
    seed: int = 0,
    n_doublings: int = 2,
    tolerance: float = CONVERGENCE_TOLERANCE,
    max_events: int = MAX_EVENTS,
) -> ConvergenceReport:
    """Rerun the same seed at `horizon` doubled `n_doublings` times.

    The estimate is non-convergent when the mean delay or the delay variance
    moves by more than `tolerance` between two successive horizons, which is
    what happens when the delay has no finite mean or variance."""
    if warmup is None:
        warmup = 0.1 * horizon
    horizons = [horizon * 2 ** k for k in range(n_doublings + 1)]
    results = [
        run(arrival, service, policy, current, warmup=warmup, seed=seed, max_events=max_events)
        for current in horizons
    ]
    report = ConvergenceReport(horizons, results, tolerance)
    logger.info(
        "Convergence of %s with %s: delay moves %s, variance moves %s.",
        policy.label, service, report.delay_moves, report.delay_var_moves
    )
    return report
