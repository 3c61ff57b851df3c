import math

from ..distributions import ArrivalProcess, DistributionTemplate
from ..exceptions import InadmissibleParameterError, UnstableSystemError


def utilization(arrival: ArrivalProcess, service: DistributionTemplate, n_servers: int = 1) -> float:
    """rho = lambda / (M mu)."""
    return arrival.rate / (n_servers * service.mu)


def _pollaczek_khinchine(arrival: ArrivalProcess, service: DistributionTemplate, name: str) -> float:
    if not arrival.is_poisson:
        raise InadmissibleParameterError(
            "The {} delay formula requires Poisson generation, got {}; use `kind`=poisson.".format(name, arrival),
            "kind",
            arrival.law.kind,
        )
    rho = utilization(arrival, service)
    if rho >= 1:
        raise UnstableSystemError(
            "The {} queue is unstable: rho = lambda / mu = {} >= 1.".format(name, rho),
            rho,
        )
    second_moment = service.second_moment()
    if math.isinf(second_moment):
        return math.inf
    return 0.5 * arrival.rate * second_moment / (1.0 - rho) + service.mean()


def mg1_lcfsp_delay(arrival: ArrivalProcess, service: DistributionTemplate) -> float:
    """Return the mean packet delay of the M/G/1 LCFS preemptive queue,

    D = (lambda / 2) E[S^2] / (1 - rho) + E[S],

    infinite when E[S^2] diverges.

    Raises
    ------
    InadmissibleParameterError,
        If the generation process is not Poisson.
    UnstableSystemError,
        If rho = lambda / mu >= 1.
    """
    return _pollaczek_khinchine(arrival, service, "M/G/1 LCFS preemptive")


def fcfs_mg1_delay(arrival: ArrivalProcess, service: DistributionTemplate) -> float:
    """Pollaczek-Khinchine mean delay of the M/G/1 FCFS queue.

    Both disciplines are work conserving and, under Poisson arrivals, share
    the same mean delay."""
    return _pollaczek_khinchine(arrival, service, "M/G/1 FCFS")


def lcfsp_resume_delay(arrival: ArrivalProcess, service: DistributionTemplate) -> float:
    """Mean delay of the M/G/1 LCFS preemptive-resume queue, E[S] / (1 - rho).

    A packet leaves when the busy period started by its own arrival ends,
    so its delay is distributed as a busy period. The mean is finite as soon
    as rho < 1, while the variance diverges with E[S^2]. This is the oracle
    for the simulated resume discipline; for exponential service it equals
    `mg1_lcfsp_delay`.
    """
    if not arrival.is_poisson:
        raise InadmissibleParameterError(
            "The LCFS preemptive-resume delay requires Poisson generation, got {}; use `kind`=poisson.".format(arrival),
            "kind",
            arrival.law.kind,
        )
    rho = utilization(arrival, service)
    if rho >= 1:
        raise UnstableSystemError(
            "The M/G/1 LCFS preemptive-resume queue is unstable: rho = {} >= 1.".format(rho),
            rho,
        )
    return service.mean() / (1.0 - rho)
