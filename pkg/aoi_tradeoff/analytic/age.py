"""Average age of the single server LCFS preemptive queue and of the
infinite server queue, together with the minimum age of any system fed by
the same generation process."""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from ..distributions import ArrivalProcess, Deterministic, DistributionTemplate
from ..exceptions import DegeneratePreemptionError
from ..utils import RunningStats, chunk_streams, integrate

logger = logging.getLogger(__name__)

DEFAULT_N_PATHS = 10 ** 6
CHUNK_SIZE = 2 ** 16
SMALLEST_PROBABILITY = np.finfo(float).tiny


@dataclass(frozen=True)
class MinTermEstimate:
    """Monte Carlo estimate of E[min_l (X_1 + ... + X_l + S_{l+1})]."""
    value: float
    std_error: float
    n_paths: int

    def to_dict(self) -> dict:
        return {"value": self.value, "std_error": self.std_error, "n_paths": self.n_paths}


def a_min(arrival: ArrivalProcess) -> float:
    """Return the minimum average age E[X^2] / (2 E[X]), infinite when the
    second moment of the inter-generation time diverges."""
    second_moment = arrival.second_moment()
    if math.isinf(second_moment):
        return math.inf
    return 0.5 * second_moment / arrival.mean()


def _preemption_terms(arrival: ArrivalProcess, service: DistributionTemplate, method: str) -> Tuple[float, float]:
    """Return P(S < X) and E[min(X, S)]."""
    if method not in ("auto", "quadrature"):
        raise ValueError(
            "Unknown method '{}', the available ones are 'auto' and 'quadrature'.".format(method)
        )
    rate = arrival.rate
    if method == "auto" and arrival.is_poisson:
        # P(S < X) = E[exp(-lambda S)], E[min(X, S)] = (1 - E[exp(-lambda S)]) / lambda
        return service.laplace(rate), service.laplace_complement(rate) / rate

    inter_generation = arrival.law
    probability = service.expect(
        inter_generation.tail,
        points=(inter_generation.mean(), inter_generation.quantile(0.5)),
    )
    expected_minimum = integrate(
        lambda t: inter_generation.tail(t) * service.tail(t),
        0.0,
        math.inf,
        points=(
            inter_generation.mean(),
            inter_generation.quantile(0.5),
            service.mean(),
            service.quantile(0.5),
        ),
    )
    return probability, expected_minimum


def lcfsp_age(arrival: ArrivalProcess, service: DistributionTemplate, method: str = "auto") -> float:
    """Return the average age of the G/G/1 LCFS preemptive queue.

    A = E[X^2] / (2 E[X]) + E[min(X, S)] / P(S < X)

    Arguments
    ---------
    arrival: ArrivalProcess,
        The renewal generation process.
    service: DistributionTemplate,
        The service time law.
    method: str = "auto",
        "auto" uses the Laplace transform of S for Poisson generation and
        quadrature otherwise, "quadrature" always integrates
        P(S < X) = E[P(X > S)] and E[min(X, S)] = int P(X > t) P(S > t) dt.

    Raises
    ------
    DegeneratePreemptionError,
        If P(S < X) is numerically zero, i.e. almost every packet is preempted.
    """
    probability, expected_minimum = _preemption_terms(arrival, service, method)
    if probability <= SMALLEST_PROBABILITY:
        raise DegeneratePreemptionError(
            (
                "Degenerate preemption: P(S < X) = {} for {} and {}, "
                "the average age is effectively infinite."
            ).format(probability, arrival, service),
            probability,
        )
    return a_min(arrival) + expected_minimum / probability


def lcfsp_age_alternate(arrival: ArrivalProcess, service: DistributionTemplate) -> float:
    """Return E[S] / P(S < X).

    This is the competing closed form sometimes quoted for the M/G/1 LCFS
    preemptive queue. It disagrees with `lcfsp_age` already for exponential
    service and is only reported next to it for comparison.
    """
    probability, _ = _preemption_terms(arrival, service, "auto")
    if probability <= SMALLEST_PROBABILITY:
        raise DegeneratePreemptionError(
            "Degenerate preemption: P(S < X) = {}.".format(probability),
            probability,
        )
    return service.mean() / probability


def min_term_path(inter_generation: Sequence[float], service: Sequence[float]) -> float:
    """Return min over l of (inter_generation[0] + ... + inter_generation[l-1] + service[l]).

    Extending the path stops as soon as the partial sum reaches the current
    minimum: service times are positive, so no later term can be smaller.
    The path is also cut when either sequence runs out.
    """
    best = float(service[0])
    cumulative = 0.0
    for index in range(1, min(len(inter_generation) + 1, len(service))):
        cumulative += inter_generation[index - 1]
        if cumulative >= best:
            break
        best = min(best, cumulative + service[index])
    return best


def _min_terms(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    rng: np.random.Generator,
    size: int
) -> np.ndarray:
    """Vectorised `min_term_path` over `size` independent paths."""
    best = service.sample_many(rng, size)
    cumulative = np.zeros(size)
    active = np.arange(size)
    while active.size:
        cumulative[active] += arrival.sample_many(rng, active.size)
        active = active[cumulative[active] < best[active]]
        if not active.size:
            break
        candidates = cumulative[active] + service.sample_many(rng, active.size)
        best[active] = np.minimum(best[active], candidates)
    return best


def _chunk_stats(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    stream: np.random.SeedSequence,
    size: int
) -> RunningStats:
    return RunningStats.from_array(_min_terms(arrival, service, np.random.default_rng(stream), size))


def estimate_min_term(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    n_paths: int = DEFAULT_N_PATHS,
    seed: Union[int, np.random.SeedSequence] = 0,
    n_jobs: int = 1,
) -> MinTermEstimate:
    """Monte Carlo estimate of the min-term of the infinite server age.

    The paths are cut in chunks with their own child stream of `seed`, so
    the estimate does not depend on `n_jobs`.
    """
    if n_paths < 1:
        raise ValueError("The number of paths must be positive, got {}.".format(n_paths))
    if isinstance(service, Deterministic):
        return MinTermEstimate(service.mean(), 0.0, n_paths)

    streams = chunk_streams(seed, n_paths, CHUNK_SIZE)
    sizes = [
        min(CHUNK_SIZE, n_paths - index * CHUNK_SIZE)
        for index in range(len(streams))
    ]
    logger.debug(
        "Estimating the min-term on %d paths in %d chunks with %d workers.",
        n_paths, len(streams), n_jobs
    )
    if n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as executor:
            partials = list(executor.map(
                lambda job: _chunk_stats(arrival, service, *job),
                zip(streams, sizes)
            ))
    else:
        partials = [
            _chunk_stats(arrival, service, stream, size)
            for stream, size in zip(streams, sizes)
        ]

    total = RunningStats()
    for partial in partials:
        total = total.merge(partial)
    return MinTermEstimate(total.mean, total.std_error, n_paths)


def gginf_age(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    n_paths: int = DEFAULT_N_PATHS,
    seed: Union[int, np.random.SeedSequence] = 0,
    n_jobs: int = 1,
) -> Tuple[float, MinTermEstimate]:
    """Return the average age of the G/G/infinity queue and its min-term.

    A = E[X^2] / (2 E[X]) + E[min_l (X_1 + ... + X_l + S_{l+1})]

    Deterministic service needs no simulation: every path is minimised by
    its first term, so the age is a_min + 1/mu exactly.
    """
    estimate = estimate_min_term(arrival, service, n_paths=n_paths, seed=seed, n_jobs=n_jobs)
    return a_min(arrival) + estimate.value, estimate
