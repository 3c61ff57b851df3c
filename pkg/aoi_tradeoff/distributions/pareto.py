import math
from typing import Callable, Iterable, Optional

import numpy as np

from ..exceptions import InadmissibleParameterError
from ..utils import integrate
from .distribution_template import DistributionTemplate, LOG_LARGEST_SAMPLE, saturated_exp


class Pareto(DistributionTemplate):
    """Pareto law with shape alpha > 1 and scale theta = (alpha - 1) / (mu alpha),
    so that the mean is 1/mu for every alpha. The tail gets heavier as alpha
    approaches 1."""
    KIND = "pareto"
    SHAPE_NAME = "alpha"

    def _check_shape(self, shape: Optional[float]) -> float:
        alpha = self._require_number(shape)
        if alpha <= 1:
            raise InadmissibleParameterError(
                "The Pareto `shape` alpha must satisfy alpha > 1 for the mean to exist, got {}.".format(alpha),
                "shape",
                shape,
            )
        return alpha

    @property
    def alpha(self) -> float:
        return self.shape

    @property
    def theta(self) -> float:
        return (self.alpha - 1.0) / (self.mu * self.alpha)

    def sample_many(self, rng: np.random.Generator, size: int) -> np.ndarray:
        # inverse CDF with U in (0, 1]
        uniforms = 1.0 - rng.random(size)
        return saturated_exp(math.log(self.theta) - np.log(uniforms) / self.alpha)

    def cdf(self, x: float) -> float:
        if x < self.theta:
            return 0.0
        return -math.expm1(self.alpha * math.log(self.theta / x))

    def tail(self, x: float) -> float:
        if x < self.theta:
            return 1.0
        return math.exp(self.alpha * math.log(self.theta / x))

    def truncated_mean(self, x: float) -> float:
        # Integrating s f(s) over [theta, x] gives (1/mu)(1 - (theta/x)^(alpha-1))
        if x < self.theta:
            return 0.0
        return -math.expm1((self.alpha - 1.0) * math.log(self.theta / x)) / self.mu

    def upper_truncated_mean(self, x: float) -> float:
        if x < self.theta:
            return self.mean()
        return math.exp((self.alpha - 1.0) * math.log(self.theta / x)) / self.mu

    def second_moment(self) -> float:
        if self.alpha <= 2:
            return math.inf
        return self.alpha * self.theta ** 2 / (self.alpha - 2.0)

    def quantile(self, p: float) -> float:
        return self.theta * math.exp(-math.log1p(-p) / self.alpha)

    def _value(self, u: float) -> float:
        return math.exp(min(math.log(self.theta) - math.log(u) / self.alpha, LOG_LARGEST_SAMPLE))

    def expect(self, function: Callable[[float], float], points: Iterable[float] = ()) -> float:
        # E[h(S)] = integral over u in (0, 1] of h(theta u^(-1/alpha))
        breaks = [
            math.exp(self.alpha * math.log(self.theta / point))
            for point in points
            if point > self.theta
        ]
        return integrate(lambda u: function(self._value(u)), 0.0, 1.0, points=breaks)

    @staticmethod
    def tail_lightness(shape: Optional[float]) -> float:
        return shape
