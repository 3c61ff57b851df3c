import heapq
import logging
import math
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd

from ..distributions import ArrivalProcess, DistributionTemplate
from ..exceptions import EventBudgetExceededError, InadmissibleParameterError
from ..utils import RunningStats
from .age_integrator import AgeIntegrator
from .disciplines import make_discipline
from .packet import Packet
from .policy import PolicyConfig
from .sampler import StreamSampler
from .sim_result import SimResult

logger = logging.getLogger(__name__)

MAX_EVENTS = 10 ** 9
DEFAULT_WARMUP_FRACTION = 0.1
DEFAULT_SAMPLE_POINTS = 10000

# At equal timestamps completions are handled before arrivals.
COMPLETION = 0
ARRIVAL = 1


class Simulator:
    """Event driven simulation of an update system.

    Events live in a binary heap keyed by (time, tie class, sequence number),
    a total order, so a run is a deterministic function of its seed. The first
    packet is generated at time X_0; its service requirement is drawn when it
    is generated.

    Arguments
    ---------
    arrival: ArrivalProcess,
        The generation process.
    service: DistributionTemplate,
        The service time law.
    policy: PolicyConfig,
        The discipline.
    horizon: float,
        The simulated time.
    warmup: Optional[float] = None,
        The initial interval excluded from the statistics, by default 10% of
        the horizon.
    seed: int = 0,
        The seed of the replication.
    max_events: int = 10**9,
        Hard cap on the processed events.
    sampler = None,
        Source of the draws, by default a `StreamSampler` of `seed`. Any
        object with `next_inter_generation()` and `next_service()` works.
    record_trace: bool = False,
        Whether to keep the breakpoints of the age process.
    """

    def __init__(
        self,
        arrival: ArrivalProcess,
        service: DistributionTemplate,
        policy: PolicyConfig,
        horizon: float,
        warmup: Optional[float] = None,
        seed: int = 0,
        max_events: int = MAX_EVENTS,
        sampler=None,
        record_trace: bool = False,
    ):
        if not isinstance(horizon, (int, float)) or not math.isfinite(horizon) or horizon <= 0:
            raise InadmissibleParameterError(
                "The `horizon` must be a positive finite number, got {}.".format(horizon),
                "horizon",
                horizon,
            )
        if warmup is None:
            warmup = DEFAULT_WARMUP_FRACTION * horizon
        if not 0 <= warmup < horizon:
            raise InadmissibleParameterError(
                "The `warmup` must satisfy 0 <= warmup < horizon = {}, got {}.".format(horizon, warmup),
                "warmup",
                warmup,
            )
        self._arrival = arrival
        self._service = service
        self._policy = policy
        self._horizon = float(horizon)
        self._warmup = float(warmup)
        self._seed = seed
        self._max_events = max_events
        self._sampler = StreamSampler(arrival, service, seed) if sampler is None else sampler
        self._record_trace = record_trace
        self._trace: Optional[List[Tuple[float, float]]] = None

        if policy.is_fcfs and arrival.rate >= policy.n_servers * service.mu:
            logger.warning(
                "The %s system is unstable: lambda = %s >= M mu = %s, delays grow with the horizon.",
                policy.label, arrival.rate, policy.n_servers * service.mu
            )

    @property
    def trace(self) -> Optional[List[Tuple[float, float]]]:
        return self._trace

    def run(self) -> SimResult:
        horizon, warmup = self._horizon, self._warmup
        sampler = self._sampler
        discipline = make_discipline(self._policy)
        integrator = AgeIntegrator(warmup, record_trace=self._record_trace)
        delays = RunningStats()
        push, pop = heapq.heappush, heapq.heappop

        events = []
        sequence = 0
        n_events = n_generated = n_completed = n_delivered = n_informative = 0

        logger.debug(
            "Simulating %s with %s and %s up to %s (warmup %s, seed %s).",
            self._policy.label, self._arrival, self._service, horizon, warmup, self._seed
        )

        push(events, (sampler.next_inter_generation(), ARRIVAL, sequence, None))
        sequence += 1
        while events and events[0][0] <= horizon:
            now, tie_class, _, token = pop(events)
            n_events += 1
            if n_events > self._max_events:
                raise EventBudgetExceededError(
                    "Event budget exceeded: more than {} events by time {}.".format(self._max_events, now),
                    n_events,
                    now,
                )
            integrator.advance(now)

            if tie_class == ARRIVAL:
                packet = Packet(n_generated, now, sampler.next_service())
                n_generated += 1
                for completion_time, completion_token in discipline.arrive(packet, now):
                    push(events, (completion_time, COMPLETION, sequence, completion_token))
                    sequence += 1
                push(events, (now + sampler.next_inter_generation(), ARRIVAL, sequence, None))
                sequence += 1
                continue

            packet, completions = discipline.complete(token, now)
            for completion_time, completion_token in completions:
                push(events, (completion_time, COMPLETION, sequence, completion_token))
                sequence += 1
            if packet is None:
                continue
            n_completed += 1
            informative = integrator.receive(packet.gen_time, now)
            if now >= warmup:
                n_delivered += 1
                n_informative += informative
                delays.push(packet.delay)

        integrator.close(horizon)
        self._trace = integrator.trace

        logger.debug(
            "Processed %d events: %d generated, %d completed, %d in system.",
            n_events, n_generated, n_completed, discipline.n_in_system
        )

        return SimResult(
            avg_age=integrator.area / (horizon - warmup),
            avg_delay=delays.mean if n_delivered else None,
            delay_var=delays.variance if n_delivered else None,
            n_delivered=n_delivered,
            n_informative=n_informative,
            age_stderr=0.0,
            delay_stderr=0.0,
            horizon=horizon,
            seed=self._seed,
            warmup=warmup,
            n_generated=n_generated,
            n_completed=n_completed,
            n_in_system=discipline.n_in_system,
            age_area=integrator.area,
            n_events=n_events,
        )


def run(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    policy: PolicyConfig,
    horizon: float,
    warmup: Optional[float] = None,
    seed: int = 0,
    max_events: int = MAX_EVENTS,
    sampler=None,
) -> SimResult:
    """Simulate one replication, see `Simulator` for the arguments."""
    return Simulator(
        arrival, service, policy, horizon,
        warmup=warmup, seed=seed, max_events=max_events, sampler=sampler
    ).run()


def downsample(trace: List[Tuple[float, float]], sample_points: int) -> List[Tuple[float, float]]:
    """Keep at most `sample_points` breakpoints, evenly spread by index and
    always including the first and the last one."""
    if sample_points < 1:
        raise ValueError("The number of sample points must be positive, got {}.".format(sample_points))
    if len(trace) <= sample_points:
        return list(trace)
    indices = np.unique(np.linspace(0, len(trace) - 1, sample_points).round().astype(int))
    return [trace[index] for index in indices]


def age_trace(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    policy: PolicyConfig,
    horizon: float,
    warmup: Optional[float] = None,
    seed: int = 0,
    sample_points: Optional[int] = DEFAULT_SAMPLE_POINTS,
    sampler=None,
) -> List[Tuple[float, float]]:
    """Return the breakpoints (t, A(t)) of the age process on [0, horizon].

    Each informative reception at time t contributes the two points
    (t, age before) and (t, age after); the age is linear with slope 1 in
    between. `sample_points=None` returns the full trace.
    """
    simulator = Simulator(
        arrival, service, policy, horizon,
        warmup=warmup, seed=seed, sampler=sampler, record_trace=True
    )
    simulator.run()
    if sample_points is None:
        return simulator.trace
    return downsample(simulator.trace, sample_points)


def trace_area(trace: List[Tuple[float, float]]) -> float:
    """Area under the piecewise linear trace."""
    times = np.array([t for t, _ in trace])
    ages = np.array([age for _, age in trace])
    return float(np.sum(np.diff(times) * (ages[:-1] + ages[1:]) / 2.0))


def write_age_trace(trace: List[Tuple[float, float]], path: str):
    """Write the trace as CSV with the columns `t,age`."""
    pd.DataFrame(trace, columns=["t", "age"]).to_csv(path, index=False, lineterminator="\n")
