import numpy as np

from ..distributions import ArrivalProcess, DistributionTemplate


def recursion_age(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    n_packets: int = 10 ** 6,
    seed: int = 0,
) -> float:
    """Average age of the LCFS preemptive single server queue computed from
    the age at generation epochs instead of an event simulation.

    With B_i the age when packet i is generated,
        B_{i+1} = X_i + B_i (1 - 1{S_i < X_i}),
    and the area under the age between generations i and i + 1 is
        R_i = X_i^2 / 2 + B_i min(X_i, S_i).
    The average age is sum R_i / sum X_i. B_0 = 0.
    """
    if n_packets < 1:
        raise ValueError("The number of packets must be positive, got {}.".format(n_packets))
    arrival_stream, service_stream = np.random.SeedSequence(seed).spawn(2)
    inter_generations = arrival.sample_many(np.random.default_rng(arrival_stream), n_packets)
    services = service.sample_many(np.random.default_rng(service_stream), n_packets)

    # B_{i+1} = X_m + ... + X_i where m is the last index <= i with S_m < X_m
    # (the whole prefix when there is none)
    cumulative = np.cumsum(inter_generations)
    indices = np.arange(n_packets)
    last_reset = np.maximum.accumulate(np.where(services < inter_generations, indices, -1))
    offsets = np.where(last_reset >= 1, cumulative[np.maximum(last_reset - 1, 0)], 0.0)
    ages_at_generation = np.concatenate(([0.0], (cumulative - offsets)[:-1]))

    areas = 0.5 * inter_generations ** 2 + ages_at_generation * np.minimum(inter_generations, services)
    return float(areas.sum() / cumulative[-1])
