import math
from typing import Sequence


class ScriptedSampler:
    """Replays fixed inter-generation and service times; once a script runs
    out it keeps returning `filler`."""

    def __init__(self, inter_generations: Sequence[float], services: Sequence[float], filler: float = math.inf):
        self._inter_generations = list(inter_generations)
        self._services = list(services)
        self._filler = filler

    def next_inter_generation(self) -> float:
        if self._inter_generations:
            return self._inter_generations.pop(0)
        return self._filler

    def next_service(self) -> float:
        if self._services:
            return self._services.pop(0)
        return self._filler
