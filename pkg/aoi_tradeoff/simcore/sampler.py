import numpy as np

from ..distributions import ArrivalProcess, DistributionTemplate


class StreamSampler:
    """Inter-generation and service draws of one replication.

    Each law reads from its own child stream of `seed`, drawn in blocks, so
    the i-th packet gets the same service time whatever the policy: runs of
    different policies with one seed use common random numbers.
    """
    BLOCK_SIZE = 4096

    def __init__(self, arrival: ArrivalProcess, service: DistributionTemplate, seed: int):
        arrival_stream, service_stream = np.random.SeedSequence(seed).spawn(2)
        self._arrival = arrival
        self._service = service
        self._arrival_rng = np.random.default_rng(arrival_stream)
        self._service_rng = np.random.default_rng(service_stream)
        self._inter_generations = []
        self._services = []

    def next_inter_generation(self) -> float:
        if not self._inter_generations:
            self._inter_generations = self._arrival.sample_many(self._arrival_rng, self.BLOCK_SIZE).tolist()
            self._inter_generations.reverse()
        return self._inter_generations.pop()

    def next_service(self) -> float:
        if not self._services:
            self._services = self._service.sample_many(self._service_rng, self.BLOCK_SIZE).tolist()
            self._services.reverse()
        return self._services.pop()
