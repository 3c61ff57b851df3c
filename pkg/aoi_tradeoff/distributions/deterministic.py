import math
from typing import Callable, Iterable

import numpy as np

from .distribution_template import DistributionTemplate


class Deterministic(DistributionTemplate):
    """Point mass at 1/mu."""
    KIND = "deterministic"
    IS_CONTINUOUS = False

    def sample_many(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return np.full(size, self.mean())

    def cdf(self, x: float) -> float:
        return 1.0 if x >= self.mean() else 0.0

    def tail(self, x: float) -> float:
        return 1.0 if x < self.mean() else 0.0

    def truncated_mean(self, x: float) -> float:
        return self.mean() if self.mean() <= x else 0.0

    def upper_truncated_mean(self, x: float) -> float:
        return self.mean() if self.mean() > x else 0.0

    def second_moment(self) -> float:
        return self.mean() ** 2

    def variance(self) -> float:
        return 0.0

    def quantile(self, p: float) -> float:
        return self.mean()

    def expect(self, function: Callable[[float], float], points: Iterable[float] = ()) -> float:
        return function(self.mean())

    def laplace(self, s: float) -> float:
        return math.exp(-s * self.mean())

    def laplace_complement(self, s: float) -> float:
        return -math.expm1(-s * self.mean())
