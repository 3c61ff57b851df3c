import math
from typing import Callable, Iterable

import numpy as np
from scipy.special import gammainc

from ..utils import integrate
from .distribution_template import DistributionTemplate


class Exponential(DistributionTemplate):
    KIND = "exponential"

    def sample_many(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return np.maximum(rng.exponential(self.mean(), size), np.finfo(float).tiny)

    def cdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        return -math.expm1(-self.mu * x)

    def tail(self, x: float) -> float:
        if x <= 0:
            return 1.0
        return math.exp(-self.mu * x)

    def truncated_mean(self, x: float) -> float:
        # E[S 1{S <= x}] = (1/mu) P(2, mu x), the regularized lower incomplete gamma
        return float(gammainc(2.0, self.mu * x)) / self.mu

    def upper_truncated_mean(self, x: float) -> float:
        return math.exp(-self.mu * x) * (x + self.mean())

    def second_moment(self) -> float:
        return 2.0 * self.mean() ** 2

    def quantile(self, p: float) -> float:
        return -math.log1p(-p) / self.mu

    def expect(self, function: Callable[[float], float], points: Iterable[float] = ()) -> float:
        mu = self.mu
        return integrate(
            lambda value: function(value) * mu * math.exp(-mu * value),
            0.0,
            math.inf,
            points=list(points) + [self.mean()],
        )

    def laplace(self, s: float) -> float:
        return self.mu / (self.mu + s)

    def laplace_complement(self, s: float) -> float:
        return s / (self.mu + s)
